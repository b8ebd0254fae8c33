#!/usr/bin/env python3
"""
Search configurations and congruence certificates.

A certificate records a vector c over Z/p^j indexed by the discriminants of
its configuration such that sum_D c_D L_D vanishes modulo p^j through
q^verified_to. Certificates are stored as JSON documents with a format
version so they can serve as regression fixtures.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import PreconditionError
from ..modforms import is_plus_space_index
from ..products import lhat_modulus_exponent
from ..utils.arith import inverse_mod, is_prime, is_square
from ..utils.files import atomic_write_json, read_json
from .admissible import h_S, s_p_membership
from .bounds import index_gamma0, lhat_set_size, required_set_size

logger = logging.getLogger(__name__)

CERTIFICATE_FORMAT = 1

MODES = ("logderiv", "lhat")


@dataclass(frozen=True)
class SearchConfig:
    """
    Inputs of one congruence search.

    S is sorted ascending on construction (duplicates are kept). mode is
    "logderiv" for p >= 5 and "lhat" (the modified series) for p in {2, 3};
    it defaults from p.
    """

    d: int
    p: int
    j: int
    S: Tuple[int, ...]
    N: int = 1
    n_terms: Optional[int] = None
    mode: Optional[str] = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"p = {self.p} is not prime")
        if self.j < 1:
            raise PreconditionError(f"j must be positive, got {self.j}")
        if self.d <= 0 or not is_plus_space_index(self.d):
            raise PreconditionError(f"d = {self.d} must be positive with d = 0, 3 (mod 4)")
        if not self.S:
            raise PreconditionError("the discriminant set S is empty")
        if self.n_terms is not None and self.n_terms < 1:
            raise PreconditionError(f"n_terms must be positive, got {self.n_terms}")
        mode = self.mode or ("lhat" if self.p in (2, 3) else "logderiv")
        if mode not in MODES:
            raise PreconditionError(f"unknown mode {mode!r}")
        if mode == "lhat" and self.p not in (2, 3):
            raise PreconditionError(f"the modified series are used for p in {{2, 3}}, got {self.p}")
        if mode == "logderiv" and self.p < 5:
            raise PreconditionError(f"plain log derivatives need p >= 5, got {self.p}")
        for D in self.S:
            if D <= 1 or D % 4 not in (0, 1) or is_square(D):
                raise PreconditionError(f"D = {D} is not a non-square discriminant > 1")
            if gcd(D, self.d) != 1:
                raise PreconditionError(f"D = {D} is not coprime to d = {self.d}")
            if not s_p_membership(D, self.d, self.p, self.N):
                raise PreconditionError(
                    f"{self.p} splits in Q(sqrt({-self.d * D})), so D = {D} is not admissible"
                )
        object.__setattr__(self, "S", tuple(sorted(self.S)))
        object.__setattr__(self, "mode", mode)

    @cached_property
    def h_S(self) -> int:
        return h_S(self.S, self.d, self.N)

    @property
    def index(self) -> int:
        return index_gamma0(self.N)

    @property
    def modulus_exponent(self) -> int:
        """Exponent e of the modulus p^e the columns are reduced by."""
        if self.mode == "lhat":
            return lhat_modulus_exponent(self.p, self.j)
        return self.j

    @property
    def modulus(self) -> int:
        return self.p ** self.modulus_exponent

    @property
    def strict(self) -> bool:
        return self.mode == "logderiv"

    @cached_property
    def threshold(self) -> Fraction:
        if self.mode == "lhat":
            return lhat_set_size(self.p, self.j, self.h_S, self.N)
        return required_set_size(self.p, self.j, self.h_S, self.N)

    @property
    def threshold_met(self) -> bool:
        size = len(self.S)
        return size > self.threshold if self.strict else size >= self.threshold

    @property
    def terms(self) -> int:
        """n_terms, defaulting to the ceiling of the threshold."""
        return self.n_terms if self.n_terms is not None else max(1, ceil(self.threshold))

    def required_precision(self, T: Optional[int] = None, support: Optional[Sequence[int]] = None) -> int:
        """Precision of f_d needed for T coefficients of every L_D with D in support."""
        T = self.terms if T is None else T
        return max(support or self.S) * T * T

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "p": self.p,
            "j": self.j,
            "S": list(self.S),
            "N": self.N,
            "n_terms": self.terms,
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchConfig":
        return cls(
            d=int(data["d"]),
            p=int(data["p"]),
            j=int(data["j"]),
            S=tuple(int(D) for D in data["S"]),
            N=int(data.get("N", 1)),
            n_terms=data.get("n_terms"),
            mode=data.get("mode"),
        )


def canonicalise(coeffs: Sequence[int], p: int, modulus: int) -> Tuple[int, ...]:
    """
    Scale a vector so that its first unit entry is 1, entries in [0, modulus).

    Raises:
        PreconditionError: If the vector has no unit entry
    """
    first = next((c % modulus for c in coeffs if c % p), None)
    if first is None:
        raise PreconditionError("vector has no entry prime to p")
    inv = inverse_mod(first, modulus)
    return tuple(c * inv % modulus for c in coeffs)


def symmetric(c: int, modulus: int) -> int:
    """Representative of c modulo modulus in (-modulus/2, modulus/2]."""
    c %= modulus
    return c - modulus if 2 * c > modulus else c


@dataclass
class CongruenceCertificate:
    """
    A relation sum_D coeffs[D] L_D = 0 modulo p^e checked through q^verified_to.

    nontrivial[i] says whether the column of S[i] itself is nonzero modulo
    p^e on the checked range.
    """

    config: SearchConfig
    coeffs: Tuple[int, ...]
    verified_to: int
    nontrivial: Tuple[bool, ...] = ()
    form_precision: Optional[int] = None

    def __post_init__(self):
        if len(self.coeffs) != len(self.config.S):
            raise PreconditionError(
                f"{len(self.coeffs)} coefficients for {len(self.config.S)} discriminants"
            )
        self.coeffs = tuple(c % self.modulus for c in self.coeffs)
        self.nontrivial = tuple(self.nontrivial)

    @property
    def modulus(self) -> int:
        return self.config.modulus

    @property
    def support(self) -> List[Tuple[int, int]]:
        """(D, coefficient) pairs with nonzero coefficient."""
        return [(D, c) for D, c in zip(self.config.S, self.coeffs) if c]

    def render(self) -> str:
        """e.g. '3*L5 + 2*L89', coefficients in the symmetric range."""
        name = "Lhat" if self.config.mode == "lhat" else "L"
        parts = []
        for D, c in self.support:
            c = symmetric(c, self.modulus)
            sign = "-" if c < 0 else "+"
            term = f"{name}{D}" if abs(c) == 1 else f"{abs(c)}*{name}{D}"
            parts.append((sign, term))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __str__(self) -> str:
        return f"{self.render()} = 0 (mod {self.modulus})"


def certificate_to_dict(cert: CongruenceCertificate) -> Dict[str, Any]:
    return {
        "format": CERTIFICATE_FORMAT,
        "config": cert.config.to_dict(),
        "coefficients": list(cert.coeffs),
        "modulus": cert.modulus,
        "verified_to": cert.verified_to,
        "nontrivial": list(cert.nontrivial),
        "form_precision": cert.form_precision,
        "relation": cert.render(),
    }


def certificate_from_dict(data: Dict[str, Any]) -> CongruenceCertificate:
    """
    Rebuild a certificate from its dictionary form.

    Raises:
        PreconditionError: On a foreign format version or missing fields
    """
    if not isinstance(data, dict) or data.get("format") != CERTIFICATE_FORMAT:
        raise PreconditionError("not a certificate of a supported format")
    try:
        config = SearchConfig.from_dict(data["config"])
        return CongruenceCertificate(
            config=config,
            coeffs=tuple(int(c) for c in data["coefficients"]),
            verified_to=int(data["verified_to"]),
            nontrivial=tuple(bool(x) for x in data.get("nontrivial", ())),
            form_precision=data.get("form_precision"),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise PreconditionError(f"malformed certificate: {e}") from e


def save_certificate(cert: CongruenceCertificate, path: str) -> None:
    atomic_write_json(path, certificate_to_dict(cert))
    logger.info("saved certificate %s to %s", cert, path)


def save_certificates(certs: Sequence[CongruenceCertificate], path: str) -> None:
    """Write a list of certificates as one JSON document."""
    atomic_write_json(
        path, {"format": CERTIFICATE_FORMAT, "certificates": [certificate_to_dict(c) for c in certs]}
    )


def load_certificates(path: str) -> List[CongruenceCertificate]:
    """
    Load the certificates of a file written by save_certificate or
    save_certificates.

    Raises:
        PreconditionError: If the file is missing or not a certificate file
    """
    data = read_json(path)
    if data is None:
        raise PreconditionError(f"cannot read certificates from {path}")
    if isinstance(data, dict) and "certificates" in data:
        if data.get("format") != CERTIFICATE_FORMAT:
            raise PreconditionError(f"{path} has an unsupported certificate format")
        return [certificate_from_dict(item) for item in data["certificates"]]
    return [certificate_from_dict(data)]


def load_certificate(path: str) -> CongruenceCertificate:
    certs = load_certificates(path)
    if len(certs) != 1:
        raise PreconditionError(f"{path} holds {len(certs)} certificates, expected one")
    return certs[0]
