# coding: utf-8

# # The double pentagon
#
# Two regular pentagons with opposite sides glued make a genus two surface
# with a single cone point of angle 6pi.  This walkthrough builds it, looks at
# its cone data, and cuts it into vertical cylinders.

# In[1]:

import math

import numpy as np

from flatbill import build, cone_points, decompose, stratum
from flatbill.geom import Vec2
from flatbill.surface import area

X = build("Xn", 5)
print(X.name, "genus", X.genus(), "stratum", stratum(X))
print("cone points:", cone_points(X))
print("area", area(X), "=", 5 * math.sin(2 * math.pi / 5))


# The vertical direction splits into two cylinders.  Their circumferences and
# widths have closed forms in terms of sines of odd multiples of pi/5.

# In[2]:

dec = decompose(X, Vec2(0, 1), budget=50)
for c in dec.cylinders:
    print(f"circumference {c.circumference:.6f}  width {c.width:.6f}  modulus {c.modulus:.6f}")

j = np.arange(1, 3)
h = 4 * np.sin(np.pi * (2 * j - 1) / 5) * np.cos(np.pi / 5)
w = 2 * np.sin(np.pi * (2 * j - 1) / 5) * np.sin(np.pi / 5)
print("closed forms:", h, w)
print("2 cot(pi/5) =", 2 / math.tan(math.pi / 5))


# Every cylinder has the same modulus, which is why the shear u_5 below acts
# as a Dehn multi-twist and maps the surface to itself.

# In[3]:

from flatbill.geom import sl2_element
from flatbill.veech import stabilizes

u5 = sl2_element("veech_unipotent", 5)
print("u_5 in the Veech group:", stabilizes(u5, X))
print("diag(e, 1/e) in the Veech group:", stabilizes(sl2_element("diag_t", 1.0), X))
