# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

from pyparsing import (
    Forward,
    Opt,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
    ZeroOrMore,
    one_of,
)

from .errors import CoefficientError, PolySyntaxError, UnknownVariableError
from .polynomials import INDEX, VARIABLES, universe


ParserElement.enable_packrat()


CANONICAL_NAMES = {name: name for name in VARIABLES}
ELEMENT_NAMES = dict(
    CANONICAL_NAMES, x="X", y="Y", z="Z", t="T", w="W", u="U", v="V"
)
ELEMENT_DISPLAY = {"X": "x", "Y": "y", "Z": "z", "T": "t", "W": "w"}


def _number_action(s, loc, toks):
    numer, _, denom = toks[0].partition("/")
    return [("num", int(numer), int(denom or 1), loc)]


def _identifier_action(s, loc, toks):
    return [("var", toks[0], loc)]


def _power_action(s, loc, toks):
    if len(toks) == 1:
        return [toks[0]]
    return [("pow", toks[0], int(toks[1]))]


def _factor_action(s, loc, toks):
    if len(toks) == 2 and toks[0] == "-":
        return [("neg", toks[1])]
    return [toks[-1]]


def _term_action(s, loc, toks):
    if len(toks) == 1:
        return [toks[0]]
    return [("mul", list(toks))]


def _expr_action(s, loc, toks):
    if len(toks) == 1:
        return [toks[0]]
    summands = [("+", toks[0])]
    for i in range(1, len(toks), 2):
        summands.append((toks[i], toks[i + 1]))
    return [("add", summands)]


def _grammar():
    expr = Forward()
    number = Regex(r"\d+(?:\s*/\s*\d+)?").set_parse_action(_number_action)
    identifier = Regex(r"[A-Za-z_][A-Za-z_0-9]*").set_parse_action(
        _identifier_action
    )
    atom = number | identifier | Suppress("(") + expr + Suppress(")")
    power = (atom + Opt(Suppress("^") + Regex(r"\d+"))).set_parse_action(
        _power_action
    )
    factor = (Opt(one_of("+ -")) + power).set_parse_action(_factor_action)
    term = (factor + ZeroOrMore(Suppress("*") + factor)).set_parse_action(
        _term_action
    )
    expr <<= (term + ZeroOrMore(one_of("+ -") + term)).set_parse_action(
        _expr_action
    )
    return expr


GRAMMAR = _grammar()


class _Evaluator:
    def __init__(self, R, names, allowed, text):
        self.R = R
        self.names = names
        self.allowed = allowed
        self.text = text

    def __call__(self, node):
        kind = node[0]
        if kind == "num":
            _, numer, denom, loc = node
            domain = self.R.domain
            denom_ = domain.convert(denom)
            if not denom_:
                raise CoefficientError(
                    "denominator {} vanishes in {}".format(denom, domain),
                    self.text,
                    loc,
                )
            return self.R.ground_new(domain.quo(domain.convert(numer), denom_))
        if kind == "var":
            _, name, loc = node
            canonical = self.names.get(name)
            if canonical is None or canonical not in self.allowed:
                raise UnknownVariableError(
                    "unknown variable {!r}".format(name), self.text, loc
                )
            return self.R.gens[INDEX[canonical]]
        if kind == "pow":
            return self(node[1]) ** node[2]
        if kind == "neg":
            return -self(node[1])
        if kind == "mul":
            product = self.R.one
            for factor in node[1]:
                product = product * self(factor)
            return product
        if kind == "add":
            total = self.R.zero
            for sign, summand in node[1]:
                if sign == "-":
                    total = total - self(summand)
                else:
                    total = total + self(summand)
            return total
        raise PolySyntaxError("bad parse node {!r}".format(kind), self.text)


def poly_parse(text, field, allowed_vars=VARIABLES, names=None):
    """Parse a polynomial expression into k[X,Y,Z,T,W,U,V].

    names maps spelled names to canonical variables (default: the
    canonical names themselves); allowed_vars restricts the canonical
    variables that may occur.
    """
    if names is None:
        names = CANONICAL_NAMES
    if not isinstance(text, str):
        raise PolySyntaxError("expected an expression string, got {!r}".format(text))
    try:
        tree = GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as err:
        raise PolySyntaxError(
            "syntax error: {}".format(err.msg), text, err.loc
        ) from None
    R = universe(field)
    return _Evaluator(R, names, set(allowed_vars), text)(tree)


def _monomial_text(exponents, display):
    factors = []
    for name, k in zip(VARIABLES, exponents):
        if k == 0:
            continue
        shown = display.get(name, name)
        factors.append(shown if k == 1 else "{}^{}".format(shown, k))
    return "*".join(factors)


def format_terms(terms, R, display=None):
    """Render [(exponents, coeff)] in the given order; exponents may be negative."""
    from .fields import CoefficientField

    field = CoefficientField(R.domain.characteristic())
    display = display or {}
    pieces = []
    for exponents, coeff in terms:
        negative = field.is_negative(coeff)
        magnitude = -coeff if negative else coeff
        monomial = _monomial_text(exponents, display)
        if not monomial:
            body = field.format(magnitude)
        elif magnitude == R.domain.one:
            body = monomial
        else:
            body = "{}*{}".format(field.format(magnitude), monomial)
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces) if pieces else "0"


def poly_print(p, display=None):
    """Terms in descending lex order, e.g. 'Z^2 - 1'."""
    terms = sorted(p.iterterms(), reverse=True)
    return format_terms(terms, p.ring, display)


def parse_scalar(text, field):
    p = poly_parse(str(text), field, allowed_vars=())
    return p.coeff(1)


def format_scalar(value, field):
    return field.format(field.domain.convert(value))
