import click

command = click.Group(
    name="apps",
)
