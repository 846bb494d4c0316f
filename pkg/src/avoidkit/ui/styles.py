from rich import get_console

# Plain markers on legacy Windows consoles.
is_legacy_windows = get_console().options.legacy_windows


def safe_emoji(emoji: str, fallback: str = "") -> str:
    return emoji if not is_legacy_windows else fallback


EMOJI_WARN = safe_emoji("∆", "[!]")
EMOJI_ERROR = safe_emoji("‼︎", "[!!]")
EMOJI_SUCCESS = safe_emoji("✔︎", "(+)")
EMOJI_FAILURE = safe_emoji("✘", "(x)")


STYLE_HEADING = "bold bright_green"
STYLE_HINT = "italic bright_black"
STYLE_KEY = "bold bright_blue"

STYLE_WARNING = "bold yellow"
STYLE_ERROR = "bold red"
STYLE_SUCCESS = "bold green"
STYLE_FAILURE = "bold red"
