# setup.py

from setuptools import setup, find_packages

setup(
    name="pascal-det",
    version="0.1.0",
    description="Exact Pascal determinantal arrays, determinant routes and identity checks",
    packages=find_packages(include=["pascal_det", "pascal_det.*"]),
    python_requires=">=3.9",
    install_requires=[
        "click>=8.2",
        "python-dotenv==1.0.0",
    ],
    extras_require={
        "test": ["pytest>=7.4"],
    },
    entry_points={
        "console_scripts": [
            "pascal-det = pascal_det.cli:main",
        ],
    },
)
