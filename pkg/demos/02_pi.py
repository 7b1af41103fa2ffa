"""The Laurent series of [pi]_q and [1/pi]_q from the shipped digit file."""

from importlib import resources

from qproj.qseries import CFDigitStream, mobius_series, quantize_real

path = str(resources.files("qproj").joinpath("data/pi_cf.txt"))
pi = quantize_real(CFDigitStream.from_file(path), 20)
print("[pi]_q   =", pi)
print("[1/pi]_q =", mobius_series("N S", pi))
