"""Second quantized simulation of a Mach-Zehnder interferometer with spin.

Four fermionic modes (arm a/b times spin up/down) span a 16-dimensional Fock space. Dense matrices on that space act
as the reference ("oracle") against which the closed form rates in mzi.fock.closed_form are checked.
"""
