"""
Recursive-descent parser for the parenthesized interaction notation.

    Int    := VERTEX | "(" Int "," Int ")"
    VERTEX := [A-Za-z0-9_]+

Whitespace between tokens is ignored on input and never produced on output.
"""

from errors import InteractionSyntaxError
from models import VERTEX_PATTERN, Interaction


class InteractionParser:
    """Single-use cursor over one input string"""

    def __init__(self, text: str, start: int = 0):
        self.text = text
        self.pos = start

    def error(self, message: str) -> InteractionSyntaxError:
        offset = len(self.text[: self.pos].encode("utf-8"))
        return InteractionSyntaxError(message, offset, self.text)

    def skip_whitespace(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_whitespace()
        return self.pos >= len(self.text)

    def expect(self, symbol: str, message: str):
        self.skip_whitespace()
        if self.pos >= len(self.text) or self.text[self.pos] != symbol:
            raise self.error(message)
        self.pos += 1

    def interaction(self) -> Interaction:
        self.skip_whitespace()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input")
        if self.text[self.pos] == "(":
            self.pos += 1
            left = self.interaction()
            self.expect(",", "missing comma")
            right = self.interaction()
            self.expect(")", "unbalanced parentheses")
            return Interaction.node(left, right)
        match = VERTEX_PATTERN.match(self.text, self.pos)
        if match is None:
            char = self.text[self.pos]
            if char in ",)":
                raise self.error("empty vertex token")
            raise self.error(f"unexpected character {char!r}")
        self.pos = match.end()
        return Interaction.leaf(match.group())


def parse_prefix(text: str, start: int = 0) -> tuple[Interaction, int]:
    """
    Parse one interaction from the front of text.

    Returns:
        The interaction and the position just past it, for callers that read
        further fields from the same line
    """
    parser = InteractionParser(text, start)
    sigma = parser.interaction()
    return sigma, parser.pos


def parse_interaction(text: str) -> Interaction:
    """Parse a complete interaction; trailing input is an error"""
    parser = InteractionParser(text)
    sigma = parser.interaction()
    if not parser.at_end():
        if parser.text[parser.pos] == ")":
            raise parser.error("unbalanced parentheses")
        raise parser.error("unexpected trailing input")
    return sigma


def serialize(sigma: Interaction) -> str:
    return sigma.text
