"""
Console UI components for the chainring CLI.

Everything here prints to stderr so that reports on stdout stay byte-identical.
"""

from rich import box
from rich.console import Console
from rich.table import Table
from rich.theme import Theme

from chainring.core.models import ExperimentReport
from chainring.ring.core import RingSpec

# Create a custom theme for Rich
CUSTOM_THEME = Theme({
    "info": "cyan",
    "warning": "yellow",
    "error": "bold red",
    "success": "green",
    "metadata": "dim cyan",
    "highlight": "magenta",
})

console = Console(theme=CUSTOM_THEME, stderr=True)


def display_summary(report: ExperimentReport) -> None:
    """
    Display the summary of a run.

    Args:
        report: The finished report
    """
    summary = report.summary
    style = "success" if report.all_passed else "error"
    table = Table(title=f"{report.config.command} {report.config.experiment}", box=box.ROUNDED, border_style="info")
    table.add_column("Property", style="bold")
    table.add_column("Value")

    table.add_row("Ring", f"[highlight]{report.metadata.get('ring', report.config.ring)}[/highlight]")
    table.add_row("Rows", str(summary.rows))
    table.add_row("Asserted", str(summary.asserted_rows))
    table.add_row("Passed", f"[{style}]{summary.passed_rows}[/{style}]")
    table.add_row("Pass rate", f"[{style}]{summary.pass_rate:.4f}[/{style}]")
    if summary.max_deviation_ratio is not None:
        table.add_row("Max deviation / bound", f"{summary.max_deviation_ratio:.6f}")
    table.add_row("Wall time", f"[metadata]{summary.wall_time:.3f}s[/metadata]")

    console.print(table)


def display_ring(ring: RingSpec) -> None:
    table = Table(title="Ring", box=box.ROUNDED, show_header=False, border_style="info")
    table.add_column("Property", style="bold")
    table.add_column("Value")
    table.add_row("Descriptor", f"[highlight]{ring.descriptor}[/highlight]")
    table.add_row("Order", str(ring.order))
    table.add_row("Units", str(ring.unit_count))
    console.print(table)


def display_error(message: str) -> None:
    console.print(f"[error]Error: {message}[/error]")
