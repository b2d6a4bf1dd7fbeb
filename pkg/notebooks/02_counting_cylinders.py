# coding: utf-8

# # Counting cylinders
#
# N(S, T) counts cylinders whose core curve has length at most T.  It grows
# quadratically; the constants for the double pentagon and for the unfolded
# (pi/5, 3pi/10, 3pi/10) triangle have closed forms.

# In[1]:

import sys

from flatbill import build
from flatbill.asymptotics import count_series, predicted_constant

X = build("Xn", 5)
S = build("Sn", 5)
Ts = [5, 10, 20, 40]


# Each cylinder counted once:

# In[2]:

for surf, fam in ((X, "xn"), (S, "sn")):
    series = count_series(surf, "cylinders", Ts, signed=False, predicted=predicted_constant(fam, 5))
    print(surf.name)
    series.write_csv(sys.stdout)


# Counting each cylinder once per orientation doubles every count.  On the
# square torus that is the convention where the cylinders are exactly the
# primitive integer vectors.

# In[3]:

torus = build("square_torus")
series = count_series(torus, "cylinders", [10, 25, 50], predicted=predicted_constant("torus"))
series.write_csv(sys.stdout)


# Cylinders of the double pentagon fall into two Veech-group orbits, told
# apart by area.  Their counts are in the ratio of the areas.

# In[4]:

from collections import Counter

from flatbill import cylinders_up_to

areas = Counter(round(c.area, 6) for c in cylinders_up_to(X, 40, signed=False))
print(areas)
small, large = sorted(areas)
print("count ratio", areas[small] / areas[large], "area ratio", large / small)
