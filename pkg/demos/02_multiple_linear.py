"""Adding bedrooms as a second predictor."""
import numpy as np

from regress import diagnostics, fit_multiple
from regress.datasets import load_house_prices

houses = load_house_prices("house_multi")
features = ["size", "bedrooms"]
x, y = houses.matrix(features), houses.column("price")

fit = fit_multiple(x, y, features)
print(f"intercept {fit.intercept:,.2f}")
for name, beta in fit.coefficient_map.items():
    print(f"  {name:<9} {beta:12.4f}")

report = diagnostics(fit, y)
print(f"R^2 = {report.r_squared:.6f}")

# Size and bedroom count move together here, so the size coefficient
# shrinks a little once bedrooms absorb part of the effect.
print("corr(size, bedrooms) =", round(float(np.corrcoef(x.T)[0, 1]), 3))
