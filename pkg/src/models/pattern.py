"""
Path-pattern algebra.

A simple pattern is <A_0, l_0, A_1, ..., l_{n-1}, A_n>; a reachability
pattern is <A_0, l*, A_1>. Attribute sets are stored as sorted id tuples so
two patterns with the same content are equal and hash alike whatever order
the attributes were supplied in. An empty tuple is a wildcard position.
"""
import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from ..core.exceptions import PatternFormatError
from .graph import Interner

AttributeSet = Tuple[int, ...]


class PatternKind(str, enum.Enum):
    SIMPLE = "simple"
    REACHABILITY = "reachability"


def _canonical_set(attrs: Iterable[int]) -> AttributeSet:
    return tuple(sorted(set(attrs)))


@dataclass(frozen=True)
class PathPattern:
    kind: PatternKind
    attribute_sets: Tuple[AttributeSet, ...]
    labels: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", PatternKind(self.kind))
        object.__setattr__(self, "attribute_sets", tuple(_canonical_set(a) for a in self.attribute_sets))
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.kind is PatternKind.SIMPLE:
            if len(self.attribute_sets) != len(self.labels) + 1:
                raise ValueError("simple pattern needs exactly one more attribute set than labels")
        elif len(self.attribute_sets) != 2 or len(self.labels) != 1:
            raise ValueError("reachability pattern needs two attribute sets and one label")

    # ------------------------------------------------------------ constructors

    @classmethod
    def simple(cls, attribute_sets: Iterable[Iterable[int]], labels: Iterable[int] = ()) -> "PathPattern":
        return cls(PatternKind.SIMPLE, tuple(tuple(a) for a in attribute_sets), tuple(labels))

    @classmethod
    def reachability(cls, source: Iterable[int], label: int, target: Iterable[int]) -> "PathPattern":
        return cls(PatternKind.REACHABILITY, (tuple(source), tuple(target)), (label,))

    # -------------------------------------------------------------- properties

    @property
    def is_reachability(self) -> bool:
        return self.kind is PatternKind.REACHABILITY

    @property
    def length(self) -> int:
        """Number of label positions; a reachability pattern counts as 1."""
        return len(self.labels)

    @property
    def size(self) -> int:
        """Total number of attributes over all positions."""
        return sum(len(a) for a in self.attribute_sets)

    def is_unit(self) -> bool:
        """True iff every attribute set holds exactly one attribute."""
        return all(len(a) == 1 for a in self.attribute_sets)

    # ---------------------------------------------------------------- algebra

    def dominates(self, other: "PathPattern") -> bool:
        """
        True iff self dominates other: other is no longer, its labels agree
        position by position and each of its attribute sets is a subset of
        self's. Patterns of different kinds never dominate each other.
        """
        if self.kind is not other.kind:
            return False
        m = other.length
        if m > self.length:
            return False
        if self.labels[:m] != other.labels:
            return False
        return all(
            set(other.attribute_sets[i]).issubset(self.attribute_sets[i]) for i in range(m + 1)
        )

    def vertical_extend(self, label: int, attrs: Iterable[int]) -> "PathPattern":
        """<A_0, ..., A_n> -> <A_0, ..., A_n, label, attrs>."""
        if self.is_reachability:
            raise ValueError("reachability patterns do not extend vertically")
        return PathPattern(
            PatternKind.SIMPLE,
            self.attribute_sets + (_canonical_set(attrs),),
            self.labels + (label,),
        )

    def horizontal_extend(self, other: "PathPattern") -> Optional["PathPattern"]:
        """
        Apriori join of two siblings that differ in exactly one position by
        one attribute each. Returns None when the join precondition fails.
        """
        if self.kind is not other.kind or self.labels != other.labels:
            return None
        differing = [
            i for i, (a, b) in enumerate(zip(self.attribute_sets, other.attribute_sets)) if a != b
        ]
        if len(differing) != 1:
            return None
        i = differing[0]
        mine, theirs = self.attribute_sets[i], other.attribute_sets[i]
        union = set(mine) | set(theirs)
        if not (len(union) == len(mine) + 1 == len(theirs) + 1):
            return None
        return self.with_position(i, union)

    def with_position(self, i: int, attrs: Iterable[int]) -> "PathPattern":
        sets = list(self.attribute_sets)
        sets[i] = _canonical_set(attrs)
        return PathPattern(self.kind, tuple(sets), self.labels)

    def prefix(self, m: int) -> "PathPattern":
        """Length-m prefix of a simple pattern."""
        if self.is_reachability:
            raise ValueError("reachability patterns have no prefixes")
        if not 0 <= m <= self.length:
            raise ValueError(f"prefix length {m} outside 0..{self.length}")
        return PathPattern(PatternKind.SIMPLE, self.attribute_sets[: m + 1], self.labels[:m])

    def sub_patterns(self) -> Iterator["PathPattern"]:
        """Patterns with one attribute removed from a position that keeps at least one."""
        for i, attrs in enumerate(self.attribute_sets):
            if len(attrs) < 2:
                continue
            for a in attrs:
                yield self.with_position(i, (x for x in attrs if x != a))

    def sort_key(self) -> tuple:
        return (self.length, self.kind is PatternKind.REACHABILITY, self.labels, self.attribute_sets)


@dataclass(frozen=True)
class RuleCandidate:
    antecedent: PathPattern
    consequent: PathPattern

    def is_admissible(self) -> bool:
        """Neither side may dominate the other."""
        return not (
            self.antecedent.dominates(self.consequent) or self.consequent.dominates(self.antecedent)
        )


# ---------------------------------------------------------------- canonical text

_HOP = re.compile(r"\s*-(?P<label>[^>]+?)(?P<star>\*?)->\s*")
_SET = re.compile(r"\{(?P<body>[^{}]*)\}")


def format_pattern(pattern: PathPattern, labels: Interner, attributes: Interner) -> str:
    """Canonical text: <{a,b} -label-> {c}> or <{a} -label*-> {b}>."""

    def fmt_set(attrs: AttributeSet) -> str:
        return "{" + ",".join(sorted(attributes.name_of(a) for a in attrs)) + "}"

    parts = [fmt_set(pattern.attribute_sets[0])]
    star = "*" if pattern.is_reachability else ""
    for label, attrs in zip(pattern.labels, pattern.attribute_sets[1:]):
        parts.append(f"-{labels.name_of(label)}{star}->")
        parts.append(fmt_set(attrs))
    return "<" + " ".join(parts) + ">"


def parse_pattern(text: str, labels: Interner, attributes: Interner) -> PathPattern:
    """Inverse of format_pattern; names must exist in the graph's dictionaries."""
    body = text.strip()
    if not (body.startswith("<") and body.endswith(">")):
        raise PatternFormatError(f"pattern must be enclosed in <...>: {text!r}")
    body = body[1:-1].strip()

    sets: List[AttributeSet] = []
    hop_labels: List[int] = []
    stars: List[bool] = []
    pos = 0
    expect_set = True
    while pos < len(body):
        if expect_set:
            match = _SET.match(body, pos)
            if not match:
                raise PatternFormatError(f"expected an attribute set at offset {pos}: {text!r}")
            names = [n.strip() for n in match.group("body").split(",") if n.strip()]
            ids = []
            for name in names:
                ident = attributes.id_of(name)
                if ident is None:
                    raise PatternFormatError(f"unknown attribute {name!r} in {text!r}")
                ids.append(ident)
            sets.append(_canonical_set(ids))
        else:
            match = _HOP.match(body, pos)
            if not match:
                raise PatternFormatError(f"expected '-label->' at offset {pos}: {text!r}")
            ident = labels.id_of(match.group("label"))
            if ident is None:
                raise PatternFormatError(f"unknown label {match.group('label')!r} in {text!r}")
            hop_labels.append(ident)
            stars.append(bool(match.group("star")))
        pos = match.end()
        expect_set = not expect_set
    if expect_set or not sets:
        raise PatternFormatError(f"pattern must end with an attribute set: {text!r}")

    if any(stars):
        if len(hop_labels) != 1 or not all(stars):
            raise PatternFormatError(f"reachability pattern takes exactly one starred label: {text!r}")
        return PathPattern(PatternKind.REACHABILITY, tuple(sets), tuple(hop_labels))
    return PathPattern(PatternKind.SIMPLE, tuple(sets), tuple(hop_labels))
