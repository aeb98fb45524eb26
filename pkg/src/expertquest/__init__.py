"""ExpertQuest: find programming-language experts by combining microblog
search, code-host repository statistics, and encyclopedia abstracts."""

__version__ = "0.1.0"
