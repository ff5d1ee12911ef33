"""Monte Carlo channel simulation against the exact formula.

Ten million BSC trials on the zero codeword (linearity makes the sent
word irrelevant) land within sampling error of the closed-form P_ue.
Run with:  python demos/06_monte_carlo_validation.py
"""

from crcselect import CodeSpec, dual_weight_distribution, monte_carlo_pue, p_ue

spec = CodeSpec(0x61, 24)
eps = 0.01

exact = p_ue(dual_weight_distribution(spec.g, spec.n), eps)
est = monte_carlo_pue(spec, eps, trials=10**7, seed=0)

print(f"exact P_ue           = {exact:.6e}")
print(f"Monte Carlo estimate = {est.estimate:.6e} +/- {est.stderr:.2e}")
print(f"undetected events    = {est.undetected} of {est.trials}")
print(f"deviation            = {abs(est.estimate - exact) / est.stderr:.2f} sigma")
