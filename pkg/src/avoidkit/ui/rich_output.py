from flowmark import fill_text
from rich.console import Console
from rich.text import Text

from avoidkit.ui.styles import (
    EMOJI_ERROR,
    EMOJI_FAILURE,
    EMOJI_SUCCESS,
    EMOJI_WARN,
    STYLE_ERROR,
    STYLE_FAILURE,
    STYLE_HEADING,
    STYLE_HINT,
    STYLE_KEY,
    STYLE_SUCCESS,
    STYLE_WARNING,
)

# Human-facing output goes to stderr. Reports own stdout.
console = Console(stderr=True)

rprint = console.print


def print_heading(message: str) -> None:
    rprint()
    rprint(Text(message, style=STYLE_HEADING))


def print_subtle(message: str) -> None:
    rprint(Text(message, style=STYLE_HINT))


def print_warning(message: str) -> None:
    rprint(Text(f"{EMOJI_WARN} Warning: {message}", style=STYLE_WARNING))


def print_error(message: str) -> None:
    rprint()
    rprint(Text(f"{EMOJI_ERROR} Error: {message}", style=STYLE_ERROR))


def format_verdict(ok: bool, true_str: str, false_str: str = "") -> Text:
    """
    A check mark or cross followed by the matching message.
    """
    if ok:
        return Text.assemble((EMOJI_SUCCESS, STYLE_SUCCESS), " ", true_str)
    return Text.assemble((EMOJI_FAILURE, STYLE_FAILURE), " ", false_str or true_str)


def print_verdict(ok: bool, true_str: str, false_str: str = "") -> None:
    rprint(format_verdict(ok, true_str, false_str))


def format_name_and_value(name: str, doc: str, extra_indent: str = "") -> Text:
    """
    A key followed by a wrapped description, for summaries.
    """
    doc = fill_text(doc, initial_column=len(name) + 2 + len(extra_indent), extra_indent=extra_indent)
    return Text.assemble(extra_indent, (name, STYLE_KEY), (": ", STYLE_HINT), doc)
