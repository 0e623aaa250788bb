import importlib
import logging
import os
from typing import Optional

import click

logger = logging.getLogger(__name__)


def autoload_commands(base_package: str) -> click.Group:
    """
    Recursively load all command groups below the given package.

    Args:
        base_package: Dotted name of the package holding the root `command.py`

    Returns:
        click.Group: The root group with every sub-package's commands merged in

    Raises:
        ValueError: If the root package has no valid `command` group
    """
    main_command = _import_command(f"{base_package}.command")
    if main_command is None:
        raise ValueError(f"{base_package}.command does not define a command group")

    visited_packages = set()
    _include_sub_commands(base_package, main_command, visited_packages=visited_packages)

    return main_command


def _import_command(module_name: str) -> Optional[click.Group]:
    """
    Import the `command` group of a module.

    Returns:
        click.Group or None: The group if found and valid, None otherwise
    """
    try:
        module = importlib.import_module(module_name)
    except Exception as e:
        logger.exception(f"Error importing commands from {module_name}: {str(e)}")
        return None
    if isinstance(getattr(module, "command", None), click.Group):
        return module.command
    logger.warning(f"No valid command group found in {module_name}")
    return None


def _include_sub_commands(
    package: str, parent_command: click.Group, visited_packages: set
) -> None:
    """
    Find sub-packages with a `command.py` and merge their commands, flat, into
    the parent group.
    """
    visited_packages.add(package)

    for directory in importlib.import_module(package).__path__:
        subdirs = sorted(
            d
            for d in os.listdir(directory)
            if os.path.isdir(os.path.join(directory, d)) and not d.startswith("_")
        )
        for subdir in subdirs:
            sub_package = f"{package}.{subdir}"
            if sub_package in visited_packages:
                continue
            if not os.path.isfile(os.path.join(directory, subdir, "command.py")):
                continue

            sub_command = _import_command(f"{sub_package}.command")
            if sub_command:
                _include_sub_commands(sub_package, sub_command, visited_packages)
                for name, command in sub_command.commands.items():
                    parent_command.add_command(command, name)
