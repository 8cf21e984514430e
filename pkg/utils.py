#!/usr/bin/env python3
"""
Helper utilities for reading inputs and writing outputs
"""

import json
import sys
from typing import Any, Optional

from errors import MalformedInput


def read_text(path: Optional[str]) -> str:
    """
    Read a whole input file, or stdin when no path is given

    Args:
        path (str, optional): File to read; None or '-' means stdin

    Returns:
        str: File contents
    """
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, "r") as f:
            return f.read()
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e}")


def write_text(path: Optional[str], text: str) -> None:
    """
    Write machine output to a file, or stdout when no path is given

    Args:
        path (str, optional): Destination; None or '-' means stdout
        text (str): Output
    """
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as f:
            f.write(text)
    except OSError as e:
        raise MalformedInput(f"cannot write {path}: {e}")


def dump_json(data: Any) -> str:
    # sorted keys keep reports byte-stable
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def error_message(msg):
    """
    Format an error message

    Args:
        msg (str): Error message

    Returns:
        str: Formatted error message
    """
    return f"Error: {msg}"
