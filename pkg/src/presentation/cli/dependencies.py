"""Shared CLI state and dependency providers."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click
import orjson

from src.core.config.settings import Settings
from src.core.exceptions import ValidationError
from src.domain.interfaces.repositories import ISceneRepository
from src.infrastructure.storage import FileSceneRepository
from src.presentation.schemas.run_config import RunConfig


@dataclass
class CliState:
    """Parsed group options handed to every subcommand."""

    config: RunConfig
    settings: Settings
    workers: int

    def output_dir(self, flag: Optional[Path], subcommand: str) -> Path:
        """Flag, then config file, then ``<output_root>/<subcommand>``."""
        if flag is not None:
            return Path(flag)
        if self.config.paths.output is not None:
            return self.config.paths.output
        return Path(self.settings.output_root) / subcommand

    def required_path(self, flag: Optional[Path], name: str) -> Path:
        value = flag if flag is not None else getattr(self.config.paths, name)
        if value is None:
            raise ValidationError(
                f"missing path '{name}': pass the flag or set paths.{name}", field=name
            )
        return Path(value)

    def optional_path(self, flag: Optional[Path], name: str) -> Optional[Path]:
        value = flag if flag is not None else getattr(self.config.paths, name)
        return None if value is None else Path(value)


pass_state = click.make_pass_decorator(CliState)


def get_repository() -> ISceneRepository:
    """Scene repository used by every subcommand."""
    return FileSceneRepository()


def echo_json(data: object) -> None:
    """Sorted, indented JSON on stdout."""
    click.echo(orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode())
