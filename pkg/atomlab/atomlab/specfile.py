'''
Ring spec files
===============

A ring spec is line-oriented `key=value` text:

    # GF(2) + span{1, y} X + GF(8)[[X]] X^2
    p=2
    m=1
    D=3
    n=2
    V1=1,y

`p` is the characteristic, `m` the degree of K over GF(p), `D` the
degree of F over GF(p) (so m must divide D) and `n` the conductor. For
each 1 <= i <= n-1 there is one `V<i>` line listing K-generators of V_i
as polynomials in the field generator `y`, with `^` for powers and
optional integer coefficients (`1+y+y^2`, `2y^3`, `y-1`). An empty value
or `0` is the zero subspace. Whitespace is ignored and `#` starts a
comment.

Parsing gives a validated `RingSpec`; anything else raises a
`SpecParseError` citing the line, or a `ClosureViolation` when the
subspaces do not multiply correctly.
'''

import re

import atomlab.exceptions
import atomlab.gf
import atomlab.linalg
import atomlab.ring

from atomlab.log_event import debug_log

INTEGER_KEYS = ('p', 'm', 'D', 'n')

KEY_RE = re.compile(r'^(p|m|D|n|V[1-9][0-9]*)$')
TERM_RE = re.compile(r'^([0-9]*)\*?(?:(y)(?:\^([0-9]+))?)?$')
SIGNED_TERM_RE = re.compile(r'([+-]?)([^+-]*)')


def parse_polynomial(text):
    '''
    Parse a polynomial in `y` into a list of (coefficient, exponent)
    pairs. Raises `ValueError` on anything else.

    >>> parse_polynomial("1+y+y^2")
    [(1, 0), (1, 1), (1, 2)]
    >>> parse_polynomial("2y^3-1")
    [(2, 3), (-1, 0)]
    '''
    text = text.replace(" ", "").replace("\t", "")
    if not text:
        raise ValueError("empty polynomial")
    terms = []
    position = 0
    while position < len(text):
        match = SIGNED_TERM_RE.match(text, position)
        sign, body = match.group(1), match.group(2)
        if match.end() == position or not body:
            raise ValueError(f"malformed polynomial: {text!r}")
        if position > 0 and not sign:
            raise ValueError(f"malformed polynomial: {text!r}")
        term = TERM_RE.match(body)
        if term is None or (not term.group(1) and not term.group(2)):
            raise ValueError(f"malformed term {body!r}")
        coefficient = int(term.group(1)) if term.group(1) else 1
        if term.group(2):
            exponent = int(term.group(3)) if term.group(3) else 1
        else:
            exponent = 0
        terms.append((-coefficient if sign == '-' else coefficient, exponent))
        position = match.end()
    return terms


def _read_lines(text):
    '''
    Yield (line number, key, value) for every non-blank line.
    '''
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise atomlab.exceptions.SpecParseError(
                f"expected key=value, got {line!r}", number
            )
        key, value = line.split('=', 1)
        yield number, key.strip(), value.strip()


def _integer(key, value, number):
    try:
        parsed = int(value)
    except ValueError:
        raise atomlab.exceptions.SpecParseError(
            f"{key} must be an integer, got {value!r}", number
        ) from None
    if parsed < 1:
        raise atomlab.exceptions.SpecParseError(
            f"{key} must be positive, got {parsed}", number
        )
    return parsed


def parse_spec(text):
    '''
    Parse spec file text into a validated `RingSpec`.

    >>> spec = parse_spec("p=2\\nm=1\\nD=3\\nn=2\\nV1 = 1, y\\n")
    >>> spec.n, spec.V[0].size
    (2, 4)
    >>> parse_spec("p=2\\nm=1\\nD=3\\nq=2\\n")
    Traceback (most recent call last):
    ...
    atomlab.exceptions.SpecParseError: line 4: unknown key 'q'
    '''
    values = {}
    where = {}
    for number, key, value in _read_lines(text):
        if KEY_RE.match(key) is None:
            raise atomlab.exceptions.SpecParseError(f"unknown key {key!r}", number)
        if key in values:
            raise atomlab.exceptions.SpecParseError(
                f"duplicate key {key!r} (first set on line {where[key]})", number
            )
        values[key] = value
        where[key] = number

    for key in INTEGER_KEYS:
        if key not in values:
            raise atomlab.exceptions.SpecParseError(f"missing key {key!r}")
    p, m, D, n = (_integer(key, values[key], where[key]) for key in INTEGER_KEYS)
    if D % m != 0:
        raise atomlab.exceptions.SpecParseError(
            f"m={m} does not divide D={D}", where['D']
        )

    try:
        tower = atomlab.gf.tower_make(p, m, D // m)
    except ValueError as e:
        raise atomlab.exceptions.SpecParseError(str(e), where['p']) from None

    expected = {f"V{i}" for i in range(1, n)}
    for key in sorted(set(values) - set(INTEGER_KEYS) - expected):
        raise atomlab.exceptions.SpecParseError(
            f"{key} given, but n={n} only has V1..V{n - 1}" if n > 1
            else f"{key} given, but n=1 has no subspaces",
            where[key]
        )
    for key in sorted(expected - set(values), key=lambda k: int(k[1:])):
        raise atomlab.exceptions.SpecParseError(f"missing key {key!r}")

    V = []
    for i in range(1, n):
        key = f"V{i}"
        V.append(_subspace(tower, values[key], where[key]))
    debug_log("Parsed spec", p, m, D, n)
    return atomlab.ring.spec_validate(tower, n, V)


def _subspace(tower, value, number):
    generators = []
    for item in value.split(','):
        item = item.strip()
        if not item and value.strip() == "":
            continue
        try:
            terms = parse_polynomial(item)
        except ValueError as e:
            raise atomlab.exceptions.SpecParseError(str(e), number) from None
        generators.append(tower.evaluate(terms))
    return atomlab.linalg.span(tower, generators)


def load_spec(path):
    '''
    Read and parse a spec file.
    '''
    with open(path, 'r') as f:
        return parse_spec(f.read())


def render_spec(spec, comment=None):
    '''
    Write a spec back out. Subspaces are written as their reduced
    echelon basis, so parsing the output gives back the same spec.

    >>> import atomlab.constructions
    >>> print(render_spec(atomlab.constructions.corrected(2, 1, 2, 2)), end="")
    p=2
    m=1
    D=2
    n=2
    V1=0
    '''
    tower = spec.tower
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.extend([
        f"p={tower.p}",
        f"m={tower.m}",
        f"D={tower.d}",
        f"n={spec.n}",
    ])
    for i, space in enumerate(spec.V, start=1):
        if space.dim == 0:
            lines.append(f"V{i}=0")
        else:
            lines.append(f"V{i}=" + ",".join(tower.format(v) for v in space.vectors))
    return "\n".join(lines) + "\n"
