"""Exceptions raised by the library.

Every error carries a short machine-readable ``code`` and an optional
``witness`` that the CLI serializes verbatim.
"""

from __future__ import annotations

from typing import Any


class BergmanError(ValueError):
    code = "error"

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class EmptyBasisList(BergmanError):
    code = "EmptyBasisList"


class UnequalCardinalities(BergmanError):
    code = "UnequalCardinalities"


class ExchangeAxiomViolated(BergmanError):
    code = "ExchangeAxiomViolated"


class NotAnAntichain(BergmanError):
    code = "NotAnAntichain"


class InconsistentCircuits(BergmanError):
    code = "InconsistentCircuits"


class InvalidRank(BergmanError):
    code = "InvalidRank"


class SpecNotNested(BergmanError):
    code = "SpecNotNested"


class OutOfGroundSet(BergmanError):
    code = "OutOfGroundSet"


class NotConnected(BergmanError):
    code = "NotConnected"


class NotLoopless(BergmanError):
    code = "NotLoopless"


class NotAFlat(BergmanError):
    code = "NotAFlat"


class NotAFlacet(BergmanError):
    code = "NotAFlacet"


class MemberNotInBuildingSet(BergmanError):
    code = "MemberNotInBuildingSet"


class TopMissing(BergmanError):
    code = "TopMissing"


class ReassemblyMismatch(BergmanError):
    code = "ReassemblyMismatch"


class AuditFailure(BergmanError):
    code = "AuditFailure"


class RefinementViolation(BergmanError):
    code = "RefinementViolation"
