"""
Roman Domination Engine
Module entry point: python -m roman_domination_core <command> ...
"""

from .cli import main

if __name__ == "__main__":
    main()
