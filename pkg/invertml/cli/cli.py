import sys

import click

from .cli_helper import InvertMLCLIHelper
from ..errors import ConfigError
from ..io.dataset import Transform
from ..models.types import ModelKind


class InvertMLGroup(click.Group):
    """Command group whose usage errors exit with the configuration-error status"""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = ConfigError.exit_code
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = ConfigError.exit_code
            raise


def print_version(ctx, param, value):
    """Version information callback function"""
    if not value or ctx.resilient_parsing:
        return
    InvertMLCLIHelper().handle_version()
    ctx.exit()


def common_options(func):
    """Flags shared by every command; each overrides the matching config field"""
    options = [
        click.option('--config', 'config_path', help='Run configuration (JSON or TOML)'),
        click.option('--data', help='Input CSV file'),
        click.option('--column', help='Column name or 0-based index'),
        click.option('--transform', help='Transform: ' + ', '.join(t.value for t in Transform)),
        click.option('--model', help='Model: ' + ', '.join(k.value for k in ModelKind)),
        click.option('--param', 'params', multiple=True, metavar='NAME=VALUE',
                     help='Parameter value, repeatable (e.g. --param beta=0.7)'),
        click.option('--delta', type=float, help='Region margin (default 0.01)'),
        click.option('--alpha', type=float, help='Confidence-set level (default 0.05)'),
        click.option('--bandwidth', type=int, help='Newey-West bandwidth (default floor(4 (n/100)^(2/9)))'),
        click.option('--seed', type=int, help='Random seed'),
        click.option('--n-starts', type=int, help='Number of optimizer starts'),
        click.option('--constrained/--unconstrained', default=None,
                     help='Restrict the fit to the estimated invertibility region, or lift a configured restriction'),
        click.option('--out', help='Output file, or - for stdout'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run(cli_helper: InvertMLCLIHelper, command: str, config_path, params, **options) -> None:
    sys.exit(cli_helper.handle_command(command, config_path, options, params))


# Click command line interface
@click.group(cls=InvertMLGroup, invoke_without_command=True)
@click.option('--debug', is_flag=True, help='Enable debug mode')
@click.option('--version', is_flag=True, callback=print_version,
              expose_value=False, is_eager=True, help='Display version information')
@click.pass_context
def cli(ctx, debug):
    """invertml: likelihood estimation with feasible invertibility

    Examples:
        invertml simulate --config configs/garch_simulate.toml --out sim.csv
        invertml fit --data sim.csv --model beta_t_garch --constrained --out fit.json
        invertml report --reference
    """
    cli_helper = InvertMLCLIHelper()
    cli_helper.handle_debug_mode(debug)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(0)

    ctx.obj = cli_helper


@cli.command()
@common_options
@click.pass_obj
def simulate(cli_helper, config_path, params, **options):
    """Simulate a series and its true parameter path"""
    _run(cli_helper, "simulate", config_path, params, **options)


@cli.command()
@common_options
@click.pass_obj
def fit(cli_helper, config_path, params, **options):
    """Maximum-likelihood fit (--constrained: on the estimated region)"""
    _run(cli_helper, "fit", config_path, params, **options)


@cli.command()
@common_options
@click.pass_obj
def region(cli_helper, config_path, params, **options):
    """Evaluate the invertibility region on a 2-D parameter grid"""
    _run(cli_helper, "region", config_path, params, **options)


@cli.command()
@common_options
@click.pass_obj
def test(cli_helper, config_path, params, **options):
    """Boundary test of the contraction condition at given parameters"""
    _run(cli_helper, "test", config_path, params, **options)


@cli.command()
@common_options
@click.pass_obj
def diverge(cli_helper, config_path, params, **options):
    """Gap between two filter runs with different initialisations"""
    _run(cli_helper, "diverge", config_path, params, **options)


@cli.command()
@common_options
@click.option('--reference', is_flag=True, help='Show the published index estimates')
@click.pass_obj
def report(cli_helper, config_path, params, **options):
    """Estimates table: parameters, standard errors, (cc), (ec) and p-value"""
    _run(cli_helper, "report", config_path, params, **options)


def main():
    cli()


if __name__ == '__main__':
    main()
