"""
minorlab command-line entry point.
"""

from minorlab.cli import main

if __name__ == "__main__":
    main()
