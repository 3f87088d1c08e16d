"""LOWESS smoothing: window size, robustness, and a noisy curve."""
import numpy as np

from regress import LowessConfig, smooth
from regress.datasets import load_house_prices

houses = load_house_prices("house_lowess")
size, price = houses.column("size"), houses.column("price")

# With five points, frac=0.3 would ask for a 1.5-point window. The window
# never drops below 3 points, which here makes each local line pass through
# the data exactly.
cfg = LowessConfig(frac=0.3, robust_iters=3)
print("window size:", cfg.window(len(size)))
print("smoothed:", smooth(size, price, cfg).y_smoothed)

rng = np.random.default_rng(42)
x = np.sort(rng.uniform(0, 2 * np.pi, 60))
y = np.sin(x) + rng.normal(scale=0.2, size=x.size)
y[[10, 40]] += 3.0  # two gross outliers

for iters in (0, 3):
    fitted = smooth(x, y, LowessConfig(0.3, iters)).y_smoothed
    err = np.abs(fitted - np.sin(x))
    print(f"robust_iters={iters}: max |error vs sin| = {err.max():.3f}")
