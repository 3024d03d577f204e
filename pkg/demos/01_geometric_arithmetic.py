"""
Arithmetic on the positive reals
================================

Numbers here live on the multiplicative line: addition is ordinary
multiplication, the zero element is 1, and the unit is e.  Everything
is stored as a logarithm, so each exotic operation is one float op.
"""

from geomseq import GNum, GUNIT, GZERO, gadd, gsub, gmul, gdiv, ginv, gpow, gabs

# build numbers from plain values or directly from their logs
two = GNum.from_value(2.0)
three = GNum.from_value(3.0)
e_squared = GNum(2.0)  # the constructor takes a log

print("2 (+) 3      =", gadd(two, three).value)       # 6.0: addition multiplies
print("2 (-) 3      =", gsub(two, three).value)       # 2/3
print("e^2 (*) e^3  =", gmul(e_squared, GNum(3.0)))   # logs multiply: e^6
print("e^2 (/) e^4  =", gdiv(e_squared, GNum(4.0)))   # logs divide: e^0.5

# the additive identity is 1, the multiplicative identity is e
print("zero:", GZERO.value, " unit:", GUNIT.value)
print("x (+) zero == x:", gadd(two, GZERO) == two)
print("x (*) unit == x:", gmul(two, GUNIT) == two)

# inverses: additive negation reciprocates, multiplicative inversion
# works on the log
x = GNum.from_value(5.0)
print("x (+) neg(x) is the zero:", gadd(x, gsub(GZERO, x)).value)
print("x (*) inv(x) is the unit:", gmul(x, ginv(x)).value)
print("cube of e^2:", gpow(e_squared, 3))  # e^8: the log gets cubed

# absolute value reflects anything below 1 back above it,
# so it is always >= the zero element
small = GNum.from_value(0.25)
print("abs(1/4) =", gabs(small).value)
print("abs never dips below the zero:", gabs(small).log_value >= GZERO.log_value)

# powers square the log, not the value
print("square of e^3:", gpow(GNum(3.0), 2))  # e^9

# the whole system is ordinary arithmetic seen through exp/ln
print("log of 2 (+) 3:", gadd(two, three).log_value)
import math
print("ln 2 + ln 3  :", math.log(2) + math.log(3))
