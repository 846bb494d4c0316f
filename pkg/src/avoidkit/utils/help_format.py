from __future__ import annotations

import argparse
from typing import Any

from rich import get_console
from rich.markdown import Markdown
from rich_argparse.contrib import ParagraphRichHelpFormatter
from typing_extensions import override


def help_width(min_width: int = 40, max_width: int = 100) -> int:
    """
    Console width clamped to a readable range.
    """
    return max(min_width, min(max_width, get_console().width))


class MarkdownHelpFormatter(ParagraphRichHelpFormatter):
    """
    Colorized `argparse` help that keeps paragraphs, wraps to a readable width,
    and renders command descriptions and epilogs as Markdown.
    """

    def __init__(self, prog: str, *, markdown: bool = True, **kwargs: Any) -> None:
        kwargs.setdefault("width", help_width())
        super().__init__(prog, **kwargs)
        self.markdown = markdown

    @override
    def add_text(self, text: Any) -> None:  # pyright: ignore[reportIncompatibleMethodOverride]
        if self.markdown and isinstance(text, str) and text and text != argparse.SUPPRESS:
            self.add_renderable(Markdown(text, style="argparse.text"))
            return
        super().add_text(text)
