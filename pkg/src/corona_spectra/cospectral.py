"""Cospectral pairs from neighbourhood coronae, certified by exact char polys.

Modes (G, G' are the seed pair, H the fixed graph):

* ``A-left``   G * H  vs  G' * H     needs A(G), A(G') cospectral
* ``A-right``  H * G  vs  H * G'     additionally needs equal A-coronals
* ``Q``        G * H  vs  G' * H     needs G, G' regular and Q-cospectral
* ``Q-right``  H * G  vs  H * G'     needs H regular, G, G' Q-cospectral with
                                     equal Q-coronals
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_form import PreconditionError
from .coronal import coronal_exact
from .graphs import Graph, analyze, matrix_of, to_dict
from .polynomial import IntPolynomial
from .products import neighbourhood_corona
from .spectral import char_poly_exact

MODES = ("A-left", "A-right", "Q", "Q-right")


@dataclass(frozen=True)
class CospectralCertificate:
    mode: str
    kind: str
    graphs: tuple[Graph, Graph]
    char_polys: tuple[IntPolynomial, IntPolynomial]
    equal: bool
    coronal_check: bool | None = None

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "kind": self.kind,
            "graphs": [to_dict(g) for g in self.graphs],
            "char_polys": [p.to_json() for p in self.char_polys],
            "equal": self.equal,
            "coronal_check": self.coronal_check,
        }


def verify_cospectral(ga: Graph, gb: Graph, kind: str = "A") -> tuple[bool, IntPolynomial, IntPolynomial]:
    pa = char_poly_exact(matrix_of(ga, kind))
    pb = pa if ga == gb else char_poly_exact(matrix_of(gb, kind))
    return pa == pb, pa, pb


def coronals_equal(ga: Graph, gb: Graph, kind: str) -> bool:
    ra, _ = coronal_exact(matrix_of(ga, kind))
    rb, _ = coronal_exact(matrix_of(gb, kind))
    return ra.equals(rb)


def _require_regular(g: Graph, who: str):
    if not analyze(g).is_regular:
        raise PreconditionError(f"{who} must be regular")


def generate_cospectral_pair(mode: str, g: Graph, g_prime: Graph, h: Graph) -> CospectralCertificate:
    """Check the seed preconditions exactly, build both coronae, certify."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    kind = "A" if mode.startswith("A") else "Q"
    if mode == "Q":
        _require_regular(g, "G")
        _require_regular(g_prime, "G'")
    if mode == "Q-right":
        _require_regular(h, "H")
    seeds_ok, _, _ = verify_cospectral(g, g_prime, kind)
    if not seeds_ok:
        raise PreconditionError(f"seed graphs are not {kind}-cospectral")
    coronal_ok = None
    if mode.endswith("right"):
        coronal_ok = coronals_equal(g, g_prime, kind)
        if not coronal_ok:
            raise PreconditionError(f"seed {kind}-coronals differ")
        pair = (neighbourhood_corona(h, g), neighbourhood_corona(h, g_prime))
    else:
        pair = (neighbourhood_corona(g, h), neighbourhood_corona(g_prime, h))
    equal, pa, pb = verify_cospectral(*pair, kind)
    return CospectralCertificate(mode, kind, pair, (pa, pb), equal, coronal_ok)
