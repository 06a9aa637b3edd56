"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed partition or label text."""


class NotAPartition(ValueError):
    """Sequence is not weakly decreasing."""


class InvalidLabel(ValueError):
    """Representation label violates its group's constraints."""


class UnknownPair(ValueError):
    """Symmetric-pair identifier is not one of the ten known ids."""


class NotDominant(ValueError):
    """Weight vector is not dominant for the requested group."""


class NotACharacter(ValueError):
    """Laurent polynomial is not a non-negative integer combination of
    irreducible characters of the requested group."""


class OutOfSafeRegime(ValueError):
    """Orthogonal-group label cannot be read off faithfully through SO
    characters (requires ℓ(λ) < n/2)."""


class ExactnessError(ArithmeticError):
    """An exact-arithmetic identity failed (division with remainder,
    non-integral multiplicity).  Indicates an internal bug or bad input."""


class StableRangeViolation(ValueError):
    """Query falls outside the hypotheses under which the closed branching
    formula is asserted."""

    def __init__(self, rule_id: str, violations):
        self.rule_id = rule_id
        self.violations = list(violations)
        super().__init__(f"{rule_id}: " + "; ".join(self.violations))
