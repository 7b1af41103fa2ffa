"""Quantized Vieta relations for roots of the degree 4 and degree 6 families."""

from qproj.algebraic import quantized_vieta_deg4, quantized_vieta_deg6

for rep in (quantized_vieta_deg4(7, 20), quantized_vieta_deg6(2, 20)):
    print(f"degree {rep.degree}, b = {rep.b}: {'all relations hold' if rep.ok else 'FAILURES'}")
    for name, held, _ in rep.statuses():
        print(f"  [{'ok' if held else 'FAIL'}] {name}")
    print("  S1 =", rep.sigma[1].truncate(rep.order))
