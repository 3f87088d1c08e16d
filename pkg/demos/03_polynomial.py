"""Polynomial fits of increasing degree and the ill-conditioning warning.

Raw monomials of values near 1000 span many orders of magnitude, so the
design matrix becomes numerically fragile fast. Degree 4 on five points
interpolates exactly but triggers ``ConditionWarning``.
"""
import warnings

from regress import ConditionWarning, fit_polynomial
from regress.datasets import load_house_prices

houses = load_house_prices()
size, price = houses.column("size"), houses.column("price")

for degree in range(5):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConditionWarning)
        fit = fit_polynomial(size, price, degree)
    sse = float(fit.residuals @ fit.residuals)
    flag = "  (ill-conditioned)" if caught else ""
    print(f"degree {degree}: SSE = {sse:16,.2f}{flag}")

# Rescaling the input tames the conditioning.
scaled = (size - size.mean()) / size.std()
fit = fit_polynomial(scaled, price, 3)
print("cubic on standardized size:", [round(float(c), 2) for c in (fit.intercept, *fit.coefficients)])
