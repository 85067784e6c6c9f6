"""A tour of exact slope arithmetic on the projective circle QP^1.

Slopes p/q are points of QP^1 = Q ∪ {∞}; the circular order runs through
the rationals and wraps around through ∞.  Everything below is exact
integer arithmetic — no floats anywhere.
"""

from lspacesat import INFINITY, farey_enumerate, slope, slope_ccw, slope_det

# Normalization: slopes reduce to coprime pairs with nonnegative
# denominator, so 6/4 and -3/-2 name the same point.
print("6/4  ==", slope(6, 4))
print("-3/-2 ==", slope(-3, -2))
assert slope(6, 4) == slope(-3, -2) == slope(3, 2)

# The determinant p1*q2 - p2*q1 is the exact comparison primitive.
print("\ndet(1/2, 2/3) =", slope_det(slope(1, 2), slope(2, 3)))

# Counterclockwise order wraps through ∞: 2 < 5 < ∞ < -1 reading around.
print("ccw(2, 5, ∞):", slope_ccw(slope(2), slope(5), INFINITY))
print("ccw(5, ∞, -1):", slope_ccw(slope(5), INFINITY, slope(-1)))
print("ccw(∞, -1, 2):", slope_ccw(INFINITY, slope(-1), slope(2)))

# A Farey window enumerates every reduced fraction of bounded
# denominator in an interval; this is F_5 on [0, 1].
f5 = farey_enumerate(5, window=(0, 1))
print("\nF_5 on [0,1]:", " ".join(str(x) for x in f5))

# The full Farey ball is circularly ordered starting at the meridian ∞.
ball = farey_enumerate(3)
print("Farey ball |p|,|q| <= 3 (from ∞):", " ".join(str(x) for x in ball))
