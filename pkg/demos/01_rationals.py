"""Quantize a few rationals and watch the modular group act on them."""

from fractions import Fraction

from qproj.qgroup import GroupWord
from qproj.qrat import act, act_twisted, quantize

for x in (Fraction(7, 5), Fraction(11, 3), Fraction(-7, 5)):
    print(f"[{x}] sharp = {quantize(x, 'sharp')}")
    print(f"[{x}] flat  = {quantize(x, 'flat')}")

# det +1 words keep the flavor, det -1 words swap it
w = GroupWord.parse("N R^2 S")
x = quantize(Fraction(7, 5), "sharp")
y = act(w, x)
print(f"\n{w} acting on [7/5]sharp gives a {y.flavor} value at {y.value}")
z = act_twisted(w, x)
print(f"twisted action gives a {z.flavor} value at {z.value}")
