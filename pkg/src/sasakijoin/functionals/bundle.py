"""All closed forms of one parameter set, built once and shared."""

from dataclasses import dataclass
from functools import cached_property, lru_cache

from sasakijoin.algebra.polynomial import UniPoly
from sasakijoin.algebra.rational_function import RationalFn
from sasakijoin.functionals.closed_forms import (
    f_csc,
    f_polynomial,
    scalar_numerator,
    volume_numerator,
)
from sasakijoin.functionals.einstein_hilbert import (
    eh_derivative,
    einstein_hilbert,
)
from sasakijoin.join.params import JoinParams, validated
from sasakijoin.utilities.logging import get_logger


logger = get_logger()


@dataclass(frozen=True)
class FunctionalBundle:
    """Closed forms `S_num, V_num, H, f, f_csc, H'` and, lazily, `H''`.

    Construct through `FunctionalBundle.build`, which runs every cross-check
    between the independent constructions.
    """

    params: JoinParams
    S_num: UniPoly
    V_num: UniPoly
    H: RationalFn
    f: UniPoly
    f_csc: UniPoly
    dH: RationalFn

    @classmethod
    def build(cls, params: JoinParams) -> "FunctionalBundle":
        params = validated(params)
        H = einstein_hilbert(params)
        bundle = cls(
            params=params,
            S_num=scalar_numerator(params),
            V_num=volume_numerator(params),
            H=H,
            f=f_polynomial(params),
            f_csc=f_csc(params),
            dH=eh_derivative(params, H),
        )
        logger.debug(
            f"Built functionals for {params}: deg f_csc = "
            f"{bundle.f_csc.degree}, deg H' numerator = {bundle.dH.num.degree}"
        )
        return bundle

    @cached_property
    def d2H(self) -> RationalFn:
        return self.dH.derivative()

    @cached_property
    def critical_numerator(self) -> UniPoly:
        """`S_num^(d_N+1) f_csc`; its positive roots are the critical rays."""
        return self.S_num ** (self.params.d_N + 1) * self.f_csc

    def to_dict(self) -> dict:
        """Coefficient arrays, ascending, as "p/q" strings."""
        return {
            "H_den": self.H.den.to_list(),
            "H_num": self.H.num.to_list(),
            "S_num": self.S_num.to_list(),
            "V_num": self.V_num.to_list(),
            "dH_den": self.dH.den.to_list(),
            "dH_num": self.dH.num.to_list(),
            "f": self.f.to_list(),
            "f_csc": self.f_csc.to_list(),
        }


@lru_cache(maxsize=256)
def functional_bundle(params: JoinParams) -> FunctionalBundle:
    """Cached `FunctionalBundle.build`."""
    return FunctionalBundle.build(params)
