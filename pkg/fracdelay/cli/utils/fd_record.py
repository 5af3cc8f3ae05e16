"""
fracdelay | cli | utils | fd_record.py

Writes run.toml, the resolved configuration of a CLI run.
"""

import os
from typing import Any, Dict, Optional

import tomlkit
from tomlkit import comment, document, nl, table

from fracdelay.version import __version__

from .fd_config import SECTIONS

RUN_RECORD = "run.toml"


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_plain(item) for item in value]
    if isinstance(value, list):
        return [_plain(item) for item in value]
    return value


def write_run_record(
    out_dir: str,
    command: str,
    resolved: Dict[str, Any],
    options: Optional[Dict[str, Any]] = None,
) -> str:
    """
    One table per configuration section plus [command] for the command's own
    options. None values are left out, TOML has no null.
    """
    record = document()
    record.add(comment("fracdelay run record; pass it back with --config to rerun"))
    record.add("command", command)
    record.add("version", __version__)
    record.add(nl())

    for section, keys in SECTIONS.items():
        section_table = table()
        for key in keys:
            if resolved.get(key) is not None:
                section_table.add(key, _plain(resolved[key]))
        record.add(section, section_table)

    if options:
        command_table = table()
        for key, value in sorted(options.items()):
            if value is not None and value != ():
                command_table.add(key, _plain(value))
        record.add("command_options", command_table)

    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, RUN_RECORD)
    with open(path, "w", encoding="utf-8", newline="\n") as record_file:
        tomlkit.dump(record, record_file)
    return path
