"""Implicative expressions as binary trees with right-to-left variable numbering.

An expression ("term") is either a variable, stored as a plain ``int`` holding
its index, or an implication ``(premise, conclusion)`` stored as a 2-tuple of
sub-terms.  Tuples give structural equality and hashing for free, which the
classifiers rely on heavily.

A term is *canonical* when its variables are numbered right to left: the
rightmost leaf is 0 and every new variable met while scanning further left
receives the next unused index.  Read left to right, the leaf indices of a
canonical term form a growth string: the last entry is 0 and no entry exceeds
the maximum to its right by more than one.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence, Union

Term = Union[int, tuple]
Shape = Union[None, tuple]  # like Term, but a leaf is None


class ParseError(ValueError):
    """Malformed expression text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class CanonicalityError(ValueError):
    """Text or JSON parsed fine but the variable numbering is not canonical."""


class RemyVectorError(ValueError):
    """An integer vector does not encode a binary tree."""


class Spine(NamedTuple):
    """``p1 -> p2 -> ... -> pk -> g`` split into premises and goal variable."""

    premises: tuple
    goal: int


def spine(term: Term) -> Spine:
    premises = []
    node = term
    while isinstance(node, tuple):
        premises.append(node[0])
        node = node[1]
    return Spine(tuple(premises), node)


def goal_of(term: Term) -> int:
    """Variable index of the rightmost leaf."""
    node = term
    while isinstance(node, tuple):
        node = node[1]
    return node


def leaf_vars(term: Term) -> list[int]:
    """Variable indices of the leaves, left to right."""
    out = []
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, tuple):
            stack.append(node[1])
            stack.append(node[0])
        else:
            out.append(node)
    return out


def leaf_count(term: Term) -> int:
    count = 0
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, tuple):
            stack.append(node[1])
            stack.append(node[0])
        else:
            count += 1
    return count


def distinct_vars(term: Term) -> set[int]:
    return set(leaf_vars(term))


def shape_of(term: Term) -> Shape:
    """Forget the leaf labels."""
    done = []
    work = [(term, False)]
    while work:
        node, expanded = work.pop()
        if expanded:
            right = done.pop()
            left = done.pop()
            done.append((left, right))
        elif isinstance(node, tuple):
            work.append((node, True))
            work.append((node[1], False))
            work.append((node[0], False))
        else:
            done.append(None)
    return done[0]


def attach_vars(shape: Shape, labels: Sequence[int]) -> Term:
    """Label the leaves of ``shape`` with ``labels``, left to right."""
    it = iter(labels)
    done = []
    work = [(shape, False)]
    while work:
        node, expanded = work.pop()
        if expanded:
            right = done.pop()
            left = done.pop()
            done.append((left, right))
        elif node is None:
            try:
                done.append(next(it))
            except StopIteration:
                raise ValueError("fewer labels than leaves") from None
        else:
            work.append((node, True))
            work.append((node[1], False))
            work.append((node[0], False))
    leftovers = sum(1 for _ in it)
    if leftovers:
        raise ValueError(f"{leftovers} labels beyond the leaf count")
    return done[0]


def canonicalize(tokens: Sequence) -> tuple[int, ...]:
    """Renumber arbitrary variable tokens right to left, rightmost first.

    The rightmost token becomes 0 and each token not seen before, scanning
    right to left, takes the next unused index.  The result is always a valid
    growth string.
    """
    if not tokens:
        raise ValueError("cannot canonicalize an empty variable sequence")
    mapping: dict = {}
    out = [0] * len(tokens)
    for i in range(len(tokens) - 1, -1, -1):
        tok = tokens[i]
        idx = mapping.get(tok)
        if idx is None:
            idx = len(mapping)
            mapping[tok] = idx
        out[i] = idx
    return tuple(out)


def is_valid_growth_string(entries: Sequence[int]) -> bool:
    """True iff the sequence is a right-to-left restricted growth string."""
    if not entries:
        return False
    highest = -1
    for i in range(len(entries) - 1, -1, -1):
        x = entries[i]
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            return False
        if x > highest + 1:
            return False
        if x > highest:
            highest = x
    return True


def is_canonical(term: Term) -> bool:
    vars_ = leaf_vars(term)
    return tuple(vars_) == canonicalize(vars_)


def canonical_form(term: Term) -> Term:
    """The canonical representative of ``term`` up to variable renaming."""
    return attach_vars(shape_of(term), canonicalize(leaf_vars(term)))


def decode_remy_vector(entries: Sequence[int], n: int) -> Term:
    """Rebuild the binary tree encoded by a node-insertion vector.

    The vector has one slot per node label, ``2n - 1`` in total; internal
    nodes carry odd labels and leaves even ones, and the children of the
    internal node labeled ``k`` sit at slots ``k`` (left) and ``k + 1``
    (right), starting from the root label at slot 0.  Returns a term whose
    leaf values are the leaf labels; apply ``shape_of`` to forget them.
    """
    if n < 1:
        raise RemyVectorError("leaf count must be at least 1")
    if len(entries) != 2 * n - 1:
        raise RemyVectorError(
            f"expected {2 * n - 1} entries for {n} leaves, got {len(entries)}")
    top = 2 * n - 2
    visited = set()
    built: dict = {}
    work = [(entries[0], False)]
    while work:
        label, expanded = work.pop()
        if expanded:
            built[label] = (built[entries[label]], built[entries[label + 1]])
            continue
        if not isinstance(label, int) or not 0 <= label <= top:
            raise RemyVectorError(f"label {label!r} out of range 0..{top}")
        if label in visited:
            raise RemyVectorError(f"label {label} reached twice (cycle or repeat)")
        visited.add(label)
        if label % 2 == 0:
            built[label] = label
        else:
            work.append((label, True))
            work.append((entries[label + 1], False))
            work.append((entries[label], False))
    if len(visited) != 2 * n - 1:
        raise RemyVectorError("vector does not reach every label exactly once")
    return built[entries[0]]


def render(term: Term) -> str:
    """Expression text with minimal parentheses; ``->`` associates right."""
    out = []
    work = [term]
    while work:
        node = work.pop()
        if isinstance(node, str):
            out.append(node)
        elif isinstance(node, int):
            out.append(f"a{node}")
        else:
            prem, concl = node
            if isinstance(prem, tuple):
                work += [concl, "->", ")", prem, "("]
            else:
                work += [concl, "->", prem]
    return "".join(out)


def _tokenize(text: str):
    tokens = []
    i, size = 0, len(text)
    while i < size:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
        elif ch == "(":
            tokens.append(("(", 0, i))
            i += 1
        elif ch == ")":
            tokens.append((")", 0, i))
            i += 1
        elif ch == "-":
            if text[i:i + 2] != "->":
                raise ParseError("expected '->'", i)
            tokens.append(("->", 0, i))
            i += 2
        elif ch == "a":
            j = i + 1
            while j < size and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected digits after 'a'", i)
            tokens.append(("var", int(text[i + 1:j]), i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def _fold_right(items: list) -> Term:
    node = items[-1]
    for prem in reversed(items[:-1]):
        node = (prem, node)
    return node


def parse(text: str, *, canonical: bool = True) -> Term:
    """Parse expression text.

    Grammar: ``expr := term | term "->" expr``, ``term := var | "(" expr ")"``,
    ``var := "a" digits``.  Whitespace is ignored.  With ``canonical=True``
    (the default) the variable numbering must already be canonical; text with
    a foreign numbering raises ``CanonicalityError`` instead of being silently
    renumbered (renumber explicitly via ``canonical_form``).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    saved: list[list] = []
    open_positions: list[int] = []
    current: list = []
    expect_operand = True
    for kind, value, pos in tokens:
        if kind == "var":
            if not expect_operand:
                raise ParseError("expected '->' or ')'", pos)
            current.append(value)
            expect_operand = False
        elif kind == "(":
            if not expect_operand:
                raise ParseError("expected '->' or ')'", pos)
            saved.append(current)
            open_positions.append(pos)
            current = []
        elif kind == ")":
            if expect_operand or not saved:
                raise ParseError("unbalanced or empty parentheses", pos)
            inner = _fold_right(current)
            current = saved.pop()
            open_positions.pop()
            current.append(inner)
        else:  # '->'
            if expect_operand:
                raise ParseError("expected a variable or '('", pos)
            expect_operand = True
    if expect_operand:
        raise ParseError("dangling '->'", len(text))
    if saved:
        raise ParseError("unclosed '('", open_positions[-1])
    term = _fold_right(current)
    if canonical:
        vars_ = leaf_vars(term)
        if tuple(vars_) != canonicalize(vars_):
            raise CanonicalityError(
                "variable numbering is not canonical (rightmost variable is a0 and "
                "new variables are numbered right to left); use canonical_form to renumber")
    return term


def shape_string(shape: Shape) -> str:
    """Balanced-paren encoding: ``L`` for a leaf, ``(XY)`` for a node."""
    out = []
    work = [shape]
    while work:
        node = work.pop()
        if isinstance(node, str):
            out.append(node)
        elif node is None:
            out.append("L")
        else:
            work += [")", node[1], node[0], "("]
    return "".join(out)


def parse_shape_string(text: str) -> Shape:
    saved: list[list] = []
    current: list = []
    for i, ch in enumerate(text):
        if ch == "L":
            current.append(None)
        elif ch == "(":
            saved.append(current)
            current = []
        elif ch == ")":
            if not saved or len(current) != 2:
                raise ValueError(f"malformed shape string (position {i})")
            node = (current[0], current[1])
            current = saved.pop()
            current.append(node)
        else:
            raise ValueError(f"unexpected character {ch!r} in shape string (position {i})")
    if saved or len(current) != 1:
        raise ValueError("malformed shape string")
    return current[0]


def to_json_obj(term: Term) -> dict:
    """JSON object form ``{"rgs": [...], "shape": "..."}`` of a canonical term."""
    vars_ = leaf_vars(term)
    if tuple(vars_) != canonicalize(vars_):
        raise CanonicalityError("only canonical terms have a JSON form")
    return {"rgs": vars_, "shape": shape_string(shape_of(term))}


def from_json_obj(obj: dict) -> Term:
    shape = parse_shape_string(obj["shape"])
    rgs = list(obj["rgs"])
    if not is_valid_growth_string(rgs):
        raise CanonicalityError("'rgs' is not a restricted growth string")
    return attach_vars(shape, rgs)
