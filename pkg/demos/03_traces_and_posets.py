"""Traces of det -1 words are one-signed palindromes; fence posets count them."""

from qproj.fenceposet import admissible_ideals, build, generating_function
from qproj.laurent import render
from qproj.qtrace import check_palindrome_det_neg, qtrace, render_trace

word = "N R^2 S R^2 S R^3 S"
print(f"tr({word}) = {render_trace(qtrace(word))}")
print("palindrome report:", check_palindrome_det_neg(word))

p = build((1, 2, 2))
for ideal in admissible_ideals(p):
    print("  ", sorted(ideal))
print("rank generating function:", render(generating_function(p)))
