"""Levenberg-Marquardt on the exponential model a * exp(b * x) + c."""
import numpy as np

from regress import EXPONENTIAL, EvalDomain, LMConfig, fit_exponential, levenberg_marquardt

x = np.arange(5.0)
y = 2.0 * np.exp(0.5 * x) + 1.0

res = fit_exponential(x, y)  # starts from (1, 1, 1)
print("recovered", dict(zip("abc", np.round(res.params, 8).tolist())))
print(f"status {res.status.value} after {res.iterations} iterations ({res.reason} tolerance)")
print("SSE trace:", " ".join(f"{s:.3g}" for s in res.cost_trace))

rng = np.random.default_rng(0)
noisy = y + rng.normal(scale=0.2, size=y.size)
res = levenberg_marquardt(EXPONENTIAL, x, noisy, [1.0, 0.1, 0.0], LMConfig(max_iter=50))
print("noisy data:", np.round(res.params, 4), f"SSE {res.final_sse:.4f}")

# With house sizes in the thousands, b = 1 puts exp(b * x) far past the
# float range, so the starting point itself is rejected.
try:
    fit_exponential([1000.0, 1200.0, 1500.0], [1.5e5, 1.8e5, 2.1e5])
except EvalDomain as exc:
    print("house data from p0=(1,1,1):", exc)
