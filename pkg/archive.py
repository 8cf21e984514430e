#!/usr/bin/env python3
"""
JSON artifact storage for search reports, Ramsey witnesses and constructions
"""

import json
import logging
import os
from typing import List, Optional

from errors import InvalidArgument

logger = logging.getLogger(__name__)

CATEGORIES = ("ramsey", "turan", "constructions")


def _artifact_path(category: str, name: str, data_dir: str) -> str:
    if category not in CATEGORIES:
        raise InvalidArgument(f"unknown artifact category '{category}'")
    safe = "".join(c if c.isalnum() or c in "-_.," else "_" for c in name)
    return os.path.join(data_dir, category, f"{safe}.json")


def save_artifact(category: str, name: str, data: dict, data_dir: str = "data") -> Optional[str]:
    """
    Save an artifact as sorted, indented JSON

    Args:
        category (str): One of CATEGORIES
        name (str): Artifact name, e.g. 'altpath_4'
        data (dict): JSON-serializable payload
        data_dir (str): Archive root

    Returns:
        Optional[str]: Path written, or None if the file could not be saved
    """
    path = _artifact_path(category, name, data_dir)
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
    except IOError as e:
        logger.warning("could not save artifact %s: %s", path, e)
        return None
    logger.debug("saved artifact %s", path)
    return path


def load_artifact(category: str, name: str, data_dir: str = "data") -> Optional[dict]:
    """
    Load an artifact

    Returns:
        Optional[dict]: The payload, or None if missing or unreadable
    """
    path = _artifact_path(category, name, data_dir)
    try:
        if os.path.exists(path):
            with open(path, "r") as f:
                return json.load(f)
        return None
    except (json.JSONDecodeError, IOError) as e:
        logger.warning("could not read artifact %s: %s", path, e)
        return None


def list_artifacts(category: str, data_dir: str = "data") -> List[str]:
    """Names of the saved artifacts in a category, sorted"""
    folder = os.path.dirname(_artifact_path(category, "x", data_dir))
    try:
        return sorted(f[:-5] for f in os.listdir(folder) if f.endswith(".json"))
    except OSError:
        return []
