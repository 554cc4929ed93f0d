#!/usr/bin/env python3
"""
Periodic lozenge tilings
Command-line entry point
"""

from src.cli import main

if __name__ == "__main__":
    main()
