"""Dataclass config plumbing shared by the experiment scripts."""

from __future__ import annotations

import argparse
import dataclasses
import json


def parse_config(cls, description: str):
    """Build ``cls`` from defaults, an optional JSON file, then --field flags."""
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("--config", help="JSON file with field overrides")
    for f in dataclasses.fields(cls):
        kind = f.type if f.type in ("int", "float", "str") else "str"
        parser.add_argument(f"--{f.name.replace('_', '-')}", dest=f.name,
                            type={"int": int, "float": float}.get(kind, str))
    args = parser.parse_args()
    values = {}
    if args.config:
        with open(args.config) as fh:
            values.update(json.load(fh))
    values.update({k: v for k, v in vars(args).items() if k != "config" and v is not None})
    return cls(**values)
