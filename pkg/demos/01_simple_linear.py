"""Straight-line fit of price against floor area.

Run with ``python3 demos/01_simple_linear.py``.
"""
from regress import diagnostics, fit_simple, predict
from regress.datasets import load_house_prices

houses = load_house_prices("house_simple")
size, price = houses.column("size"), houses.column("price")

fit = fit_simple(size, price)
report = diagnostics(fit, price)

print(f"price ~ {fit.intercept:,.2f} + {fit.coefficients[0]:.4f} * size")
print(f"R^2 = {report.r_squared:.6f}, MSE = {report.mse:,.1f}")

# Each extra square foot adds about $115. The intercept is an
# extrapolation, since no house in the data is smaller than 1000 sq ft.
for s, p, r in zip(size, price, fit.residuals):
    print(f"  {s:6.0f} sq ft  observed {p:>9,.0f}  residual {r:>+9,.1f}")

print("1650 sq ft ->", f"{predict(fit, [1650.0])[0]:,.0f}")
