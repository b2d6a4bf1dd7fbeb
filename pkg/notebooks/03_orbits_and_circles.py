# coding: utf-8

# # Orbit counts and circle averages
#
# The quadratic growth of an orbit of a lattice in SL(2,R) acting on the plane
# is governed by the covolume and by a parabolic element fixing the vector.
# On SL(2,Z) the orbit of (1,0) is the set of primitive vectors, which gives
# an exact reference count.

# In[1]:

import math

from flatbill.geom import Vec2
from flatbill.veech import gamma_n, gj_calibration, orbit_count, sl2z

oc = orbit_count(sl2z(), Vec2(1, 0), 10)
print(oc.to_dict())
cal = gj_calibration()
print("count / formula on SL(2,Z):", cal)


# The same machinery for the Veech group of the double pentagon, applied to
# the holonomy of the shorter vertical cylinder.

# In[2]:

h1 = 4 * math.sin(math.pi / 5) * math.cos(math.pi / 5)
oc = orbit_count(gamma_n(5), Vec2(0, h1), 25, calibration=cal)
print(oc.count, "raw", round(oc.predicted, 2), "calibrated", round(oc.calibrated, 2))


# Circle averages: stretch the surface by a_t = diag(e^t, e^-t) after a
# rotation and count cylinders landing in a fixed trapezoid.  Averaged over
# the rotation angle this tracks the cylinders with length between T/2 and T.

# In[3]:

from flatbill import build
from flatbill.asymptotics import circle_average_check, trapezoid_ellipse_integral

for surf, T in ((build("square_torus"), 8.0), (build("Xn", 5), 12.0)):
    r = circle_average_check(surf, T)
    print(surf.name, r.to_dict())

t = 3.0
print("single vector:", trapezoid_ellipse_integral(Vec2(0.7 * math.exp(t), 0), t) * math.exp(2 * t),
      "vs e^2t arctan(e^-2t) =", math.exp(2 * t) * math.atan(math.exp(-2 * t)))
