"""
Entry point for the pascal-det command line tool
"""

from pascal_det.cli import main

if __name__ == '__main__':
    main()
