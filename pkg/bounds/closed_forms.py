"""
Uniform linear bounds mu_q(n) <= slope*n + intercept, valid for every n >= 2.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from bilinear.general_cc import Inapplicable
from fields.prime_power import PrimePower, is_prime, prime_power

# (name, lhs, rhs, relation) instances of a form's hypothesis on q
Hypothesis = Tuple[str, int, int, str]


@dataclass(frozen=True)
class ClosedForm:
    name: str
    slope: Fraction
    intercept: Fraction
    hypotheses: Tuple[Hypothesis, ...] = field(default_factory=tuple)
    claim: str = ""  # registry claim backing small n, if any

    def value(self, n: int) -> Fraction:
        return self.slope * n + self.intercept


def descent_slope(p: int, q: int) -> Fraction:
    """p / (q - 2 + (p-1) q/(q+1)), the genus-to-degree ratio at a GS vertex."""
    return Fraction(p) / (q - 2 + Fraction((p - 1) * q, q + 1))


def closed_forms_for(q: PrimePower) -> List[ClosedForm]:
    """Every uniform form whose hypothesis q satisfies."""
    n, p = q.q, q.p
    forms: List[ClosedForm] = []
    if n == 2:
        forms.append(ClosedForm("q=2", Fraction(189, 22), Fraction(18), (("q equals 2", n, 2, "=="),)))
    if n == 3:
        forms.append(ClosedForm("q=3", Fraction(6), Fraction(0), (("q equals 3", n, 3, "=="),),
                                claim="mu_3_small_n"))
    if n == 4:
        forms.append(ClosedForm("q=4", Fraction(87, 19), Fraction(0), (("q equals 4", n, 4, "=="),),
                                claim="mu_4_small_n"))
    if n == 5:
        forms.append(ClosedForm("q=5", Fraction(9, 2), Fraction(0), (("q equals 5", n, 5, "=="),)))
    if q.r % 2 == 0 and q.sqrt.q >= 4:
        base = q.sqrt.q
        forms.append(ClosedForm(
            "q=Q^2, Q>=4", 2 * (1 + descent_slope(p, base)), Fraction(-1),
            (("Q^2 equals q", base * base, n, "=="), ("Q at least 4", base, 4, ">="))))
    if q.r == 2 and p >= 3:
        forms.append(ClosedForm(
            "q=p^2, p>=3", 2 * (1 + Fraction(2, p - 1)), Fraction(-1),
            (("p^2 equals q", p * p, n, "=="), ("p at least 3", p, 3, ">="))))
    if n > 5:
        forms.append(ClosedForm("q>5", 3 * (1 + descent_slope(p, n)), Fraction(0), (("q above 5", n, 5, ">"),)))
    if is_prime(n) and n > 5:
        forms.append(ClosedForm(
            "q=p>5", 3 * (1 + Fraction(2, n - 1)), Fraction(0),
            (("q is prime", n, p, "=="), ("p above 5", n, 5, ">"))))
    return forms


def best_form_at(q: PrimePower, n: int) -> Union[ClosedForm, Inapplicable]:
    if n < 2:
        return Inapplicable(f"uniform bounds start at n=2, got n={n}")
    forms = closed_forms_for(q)
    if not forms:
        return Inapplicable(f"no uniform bound for q={q.q}")
    return min(forms, key=lambda f: f.value(n))


def closed_form_bound(q: PrimePower, n: int) -> Union[Fraction, Inapplicable]:
    form = best_form_at(q, n)
    return form if isinstance(form, Inapplicable) else form.value(n)


def best_slope_form(q: PrimePower) -> Union[ClosedForm, Inapplicable]:
    """The form with the smallest slope; its slope bounds limsup mu_q(n)/n."""
    forms = closed_forms_for(q)
    if not forms:
        return Inapplicable(f"no uniform bound for q={q.q}")
    return min(forms, key=lambda f: (f.slope, f.intercept))


def form_by_name(q: PrimePower, name: str) -> Union[ClosedForm, Inapplicable]:
    for form in closed_forms_for(q):
        if form.name == name:
            return form
    return Inapplicable(f"form {name!r} does not apply to q={q.q}")


if __name__ == "__main__":
    for size in (2, 3, 4, 5, 9, 16, 25, 49):
        for form in closed_forms_for(prime_power(size)):
            print(f"q={size:>3}  {form.name:<14} {form.slope} n + {form.intercept}")
