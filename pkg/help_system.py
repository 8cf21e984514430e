#!/usr/bin/env python3
"""
Help screens for the ordmatch command line
"""

from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from construct import Family
from detect import PatternKind


class HelpSystem:
    def __init__(self, console: Optional[Console] = None):
        """Initialize the help system"""
        self.console = console or Console()

        # Command categories
        self.commands = {
            "Detection": {
                "detect": "Largest patterned matching or alternating path in a graph",
                "render": "Draw a graph as an SVG arc diagram or DOT",
            },
            "Extremal numbers": {
                "turan": "Exact maximum edge count avoiding a forbidden set",
                "table": "Closed forms against exhaustive search, as TSV",
            },
            "Constructions": {
                "construct": "Build an extremal or witness construction",
                "verify": "Rebuild a construction and re-check its count and freeness",
            },
            "Ramsey": {
                "ramsey": "Smallest n forcing a monochromatic target in K_n",
            },
            "Control": {
                "archive [category] [name]": "List archived artifacts or print one",
                "help [command]": "Show this help or details for one command",
            },
        }

        self.pattern_notes = {
            PatternKind.SEP: "every pair separated",
            PatternKind.NEST: "every pair nested",
            PatternKind.CROSS: "every pair crossing",
            PatternKind.NONSEP: "no pair separated",
            PatternKind.NONNEST: "no pair nested",
            PatternKind.NONCROSS: "no pair crossing",
            PatternKind.SNN: "separated blocks of crossing edges",
            PatternKind.ALT_PATH: "zigzag path whose edges shrink inward (size = vertices)",
            PatternKind.MSTAR: "two separated crossing blocks",
            PatternKind.MSTARSTAR: "two separated nested blocks",
        }

    def show_help(self, command: str = None):
        """
        Show help information

        Args:
            command (str, optional): Specific command to get help for
        """
        if command:
            self._show_command_help(command)
        else:
            self._show_main_help()

    def _show_main_help(self):
        """Show the main help screen"""
        title = Text("ordmatch - extremal numbers of ordered matchings", style="bold blue")
        self.console.print(Panel(
            "Graphs are JSON objects {\"n\": 6, \"edges\": [[1, 4], [2, 5]]} on vertices 1..n.\n"
            "Type 'help <command>' for detailed information about a specific command.",
            title=title,
            border_style="blue",
        ))
        self.console.print()

        for category, commands in self.commands.items():
            self._show_command_category(category, commands)
            self.console.print()

        self._show_patterns()
        self.console.print()
        self._show_families()

    def _show_command_category(self, category: str, commands: dict):
        """Show a category of commands"""
        table = Table(title=category, show_header=True, header_style="bold cyan")
        table.add_column("Command", style="green", no_wrap=True)
        table.add_column("Description", style="white")

        for cmd, desc in commands.items():
            table.add_row(cmd, desc)

        self.console.print(table)

    def _show_patterns(self):
        table = Table(title="Pattern kinds (kind:size)", show_header=True, header_style="bold cyan")
        table.add_column("Kind", style="green", no_wrap=True)
        table.add_column("Meaning", style="white")
        for kind, note in self.pattern_notes.items():
            table.add_row(kind.value, note)
        self.console.print(table)

    def _show_families(self):
        table = Table(title="Construction families", show_header=True, header_style="bold cyan")
        table.add_column("Family", style="green", no_wrap=True)
        for family in Family:
            table.add_row(family.value)
        self.console.print(table)

    def _show_command_help(self, command: str):
        """Show detailed help for a specific command"""
        command = command.lower()

        for category, commands in self.commands.items():
            for name, desc in commands.items():
                if name.split()[0] != command:
                    continue
                self.console.print(f"[bold cyan]Help for '{command}':[/bold cyan]")
                self.console.print(f"[green]{command}[/green] - {desc}")

                examples = self._get_command_examples(command)
                if examples:
                    self.console.print("\n[bold]Examples:[/bold]")
                    for example in examples:
                        self.console.print(f"  [dim]{example}[/dim]")
                return

        self.console.print(f"[red]Command '{command}' not found. Type 'help' to see all available commands.[/red]")

    def _get_command_examples(self, command: str) -> list:
        """Get usage examples for a command"""
        examples = {
            "detect": ["detect --in g.json --all", "detect --in g.json --kind nonnest",
                       "detect --in g.json --path", "detect --oracle 500 --max-n 9 --seed 7"],
            "turan": ["turan --forbid nonsep:3 -n 7", "turan --forbid nonsep:3 -n 8 --shift-prune",
                      "turan --forbid cross:2,sep:2 -n 8 --archive"],
            "construct": ["construct --family non_separated -n 14 -k 3",
                          "construct --family apex_chain -n 7 -k 2 --word 121211",
                          "construct --family nested_alt -n 10 -k 2 --archive"],
            "ramsey": ["ramsey --target altpath:4 --nmax 10", "ramsey --target nonnest:2 --nmax 8"],
            "table": ["table --max-n 8 --max-k 3"],
            "verify": ["verify --family hub_long -n 12 -k 3", "verify --family nested_alt -n 10 -k 2"],
            "render": ["render --in g.json --out g.svg", "render --in g.json --format dot"],
            "archive": ["archive", "archive ramsey", "archive turan cross2_sep2_n8"],
        }

        return examples.get(command, [])
