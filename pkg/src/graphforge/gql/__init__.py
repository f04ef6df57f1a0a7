"""Hand-rolled GraphQL language layer: lexer, AST, document and SDL parsers."""

from .ast import *  # noqa: F401,F403
from .lexer import GraphQLSyntaxError, tokenize  # noqa: F401
from .parser import parse_document, parse_sdl  # noqa: F401
