"""Print which quaternion algebras (a, b) with small a, b split over Q.

A '+' is split, '.' is not.  Every split entry comes with an explicit norm
witness u^2 - a v^2 = b w^2, and every row obeys reciprocity.
"""
from cupcsa.brauer2 import is_split, normalize_pair

R = [v for v in range(-10, 11) if v]

print("     " + "".join(f"{b:>4}" for b in R))
for a in R:
    marks = []
    for b in R:
        v = is_split(normalize_pair(a, b))
        if v.split:
            assert v.witness is not None
        marks.append("+" if v.split else ".")
    print(f"{a:>4} " + "".join(f"{m:>4}" for m in marks))
