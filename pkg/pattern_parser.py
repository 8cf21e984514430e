#!/usr/bin/env python3
"""
Parser for pattern, family and command names typed on the command line,
with fuzzy "did you mean" suggestions
"""

from typing import List, Optional, Sequence, Tuple

from fuzzywuzzy import fuzz, process

from construct import Family
from detect import PatternKind, PatternSpec
from errors import InvalidArgument, UsageError

COMMANDS = ("detect", "turan", "construct", "ramsey", "table", "verify", "render", "archive", "help")


class PatternParser:
    def __init__(self):
        """Initialize the pattern parser"""
        self.kinds = [kind.value for kind in PatternKind]
        self.families = [family.value for family in Family]

        # Spellings people use for the same patterns
        self.aliases = {
            "separated": "sep",
            "nested": "nest",
            "crossing": "cross",
            "non-separated": "nonsep",
            "non-nested": "nonnest",
            "non-crossing": "noncross",
            "strongly-non-nested": "snn",
            "alt": "altpath",
            "alt-path": "altpath",
            "m*": "mstar",
            "m**": "mstarstar",
        }

    def suggest(self, word: str, choices: Sequence[str], limit: int = 3) -> List[str]:
        """
        Fuzzy suggestions for a mistyped name

        Args:
            word (str): What the user typed
            choices (Sequence[str]): Valid names
            limit (int): Maximum number of suggestions

        Returns:
            List[str]: Close matches, best first
        """
        if not word:
            return []
        matches = process.extract(word, list(choices), limit=limit, scorer=fuzz.token_sort_ratio)
        return [match for match, score in matches if score > 50]

    def _unknown(self, what: str, word: str, choices: Sequence[str]) -> str:
        message = f"unknown {what} '{word}'"
        suggestions = self.suggest(word, choices)
        if suggestions:
            message += f"; did you mean {', '.join(suggestions)}?"
        return message

    def parse_kind(self, name: str) -> PatternKind:
        word = name.strip().lower()
        word = self.aliases.get(word, word)
        if word not in self.kinds:
            raise InvalidArgument(self._unknown("pattern kind", name, self.kinds))
        return PatternKind(word)

    def parse_pattern(self, text: str) -> PatternSpec:
        """
        Parse 'kind:size' with alias and typo handling

        Args:
            text (str): e.g. 'nonsep:3', 'alt:4'

        Returns:
            PatternSpec: The parsed pattern
        """
        name, sep, size = text.strip().partition(":")
        if not sep or not size.strip().isdigit():
            raise InvalidArgument(f"pattern '{text}' must look like kind:size, e.g. nonsep:3")
        return PatternSpec(self.parse_kind(name), int(size))

    def parse_forbidden(self, text: str) -> Tuple[PatternSpec, ...]:
        """Parse a comma-separated forbidden set such as 'nest:3,sep:3'"""
        parts = [part for part in text.split(",") if part.strip()]
        if not parts:
            raise InvalidArgument("the forbidden set is empty")
        return tuple(self.parse_pattern(part) for part in parts)

    def parse_family(self, name: str) -> Family:
        word = name.strip().lower().replace("-", "_")
        if word not in self.families:
            raise InvalidArgument(self._unknown("construction family", name, self.families))
        return Family(word)

    def check_command(self, name: Optional[str]) -> str:
        if name in COMMANDS:
            return name
        raise UsageError(self._unknown("command", name or "", COMMANDS))
