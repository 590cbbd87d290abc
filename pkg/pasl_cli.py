#!/usr/bin/env python3
"""CLI entry point for pseudo-ASL Gröbner basis computations."""

from pasl_groebner.cli import main


if __name__ == "__main__":
    main()
