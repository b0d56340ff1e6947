"""One-line spec strings for infinite words.

Grammar::

    spec     := "fib" | "tm"
              | "periodic:" DIGITS
              | "mech:" INT "/" INT [ ":" INT "/" INT ]
              | "cf:[" INT ("," INT)* [",..."] "]"
              | "morph:" DIGITS ("," DIGITS)+ [ "@" DIGIT ]
              | "blocks:" DIGITS ("," DIGITS)* ":" spec

A trailing ``,...`` inside ``cf:[...]`` repeats the listed coefficients
forever, e.g. ``cf:[1,2,...]``. ``morph`` lists the images of 0, 1, ... and an
optional seed letter (default 0).
"""

from __future__ import annotations

import re

from .errors import SpecSyntaxError
from .words import (
    FIBONACCI,
    THUE_MORSE,
    BlockChoice,
    Directive,
    FiniteWord,
    Mechanical,
    Morphic,
    Morphism,
    Periodic,
    WordSpec,
    validate_spec,
)

_INT = r"\d+"
_FRACTION = re.compile(rf"({_INT})/({_INT})$")
_DIGITS = re.compile(r"[0-9a-f]+$")


def _word(text: str, what: str) -> FiniteWord:
    if not _DIGITS.match(text):
        raise SpecSyntaxError(f"{what} must be a nonempty digit word, got {text!r}")
    return FiniteWord.from_str(text)


def _fraction(text: str) -> tuple[int, int]:
    m = _FRACTION.match(text)
    if not m:
        raise SpecSyntaxError(f"expected a fraction a/b, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def parse_spec(text: str) -> WordSpec:
    text = text.strip()
    spec = _parse(text)
    validate_spec(spec)
    return spec


def _parse(text: str) -> WordSpec:
    if text == "fib":
        return FIBONACCI
    if text == "tm":
        return THUE_MORSE
    head, sep, body = text.partition(":")
    if not sep:
        raise SpecSyntaxError(f"unknown spec {text!r}")
    if head == "periodic":
        return Periodic(_word(body, "periodic pattern"))
    if head == "mech":
        slope, _, rho = body.partition(":")
        p, q = _fraction(slope)
        r, s = _fraction(rho) if rho else (0, 1)
        return Mechanical(p, q, r, s)
    if head == "cf":
        if not (body.startswith("[") and body.endswith("]")):
            raise SpecSyntaxError("cf coefficients must be written as [a1,a2,...]")
        items = [t.strip() for t in body[1:-1].split(",")]
        repeat = bool(items) and items[-1] == "..."
        if repeat:
            items = items[:-1]
        if not items or not all(re.fullmatch(_INT, t) for t in items):
            raise SpecSyntaxError(f"bad coefficient list {body!r}")
        return Directive(tuple(int(t) for t in items), repeat)
    if head == "morph":
        images, _, seed = body.partition("@")
        words = [_word(t, "morphism image") for t in images.split(",")]
        if len(words) < 2:
            raise SpecSyntaxError("a morphism needs at least two images")
        size = max(len(words), 2)
        morphism = Morphism(tuple(FiniteWord(w.symbols, size) for w in words))
        if seed and not re.fullmatch(_INT, seed):
            raise SpecSyntaxError(f"bad seed {seed!r}")
        return Morphic(morphism, int(seed) if seed else 0)
    if head == "blocks":
        blocks, sep, selector = body.partition(":")
        if not sep:
            raise SpecSyntaxError("blocks spec needs a selector: blocks:<b1>,<b2>:<spec>")
        words = tuple(_word(t, "block") for t in blocks.split(","))
        return BlockChoice(words, _parse(selector))
    raise SpecSyntaxError(f"unknown spec kind {head!r}")


def format_spec(spec: WordSpec) -> str:
    """Inverse of :func:`parse_spec`."""
    if spec == FIBONACCI:
        return "fib"
    if spec == THUE_MORSE:
        return "tm"
    if isinstance(spec, Periodic):
        return f"periodic:{spec.pattern}"
    if isinstance(spec, Mechanical):
        rho = "" if (spec.rho_num, spec.rho_den) == (0, 1) else f":{spec.rho_num}/{spec.rho_den}"
        return f"mech:{spec.p}/{spec.q}{rho}"
    if isinstance(spec, Directive):
        items = [str(a) for a in spec.coefficients] + (["..."] if spec.repeat else [])
        return "cf:[" + ",".join(items) + "]"
    if isinstance(spec, Morphic):
        images = ",".join(str(img) for img in spec.morphism.images)
        return f"morph:{images}" + (f"@{spec.seed}" if spec.seed else "")
    if isinstance(spec, BlockChoice):
        blocks = ",".join(str(b) for b in spec.blocks)
        return f"blocks:{blocks}:{format_spec(spec.selector)}"
    raise SpecSyntaxError(f"cannot format {type(spec).__name__}")
