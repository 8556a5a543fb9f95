from setuptools import setup, find_packages

setup(
    name="kiricap",
    version="0.1.0",
    description="Design and simulation toolkit for kirigami-skinned, cam-driven biopsy capsule actuators",
    packages=find_packages(exclude=("tests", "tests.*", "examples", "examples.*")),
    package_data={"config": ["*.yaml", "*.json"]},
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.10.0",  # monotone interpolation, peak finding, rank tests
        "pandas>=2.0.0",  # CSV ingestion and byte-stable CSV output
        "shapely>=2.0.0",  # simple-ring check for cam profiles
        "svgwrite>=1.4.3",  # SVG 1.1 layouts
        "ezdxf>=1.1.0",  # DXF R12 layouts
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",  # for settings management
        "python-dotenv>=1.0.0",
        "pytest>=7.4.0",
        "pyyaml>=6.0",
        "rich>=13.0.0",  # for pretty console output
        "typer>=0.9.0",  # for CLI
    ],
    entry_points={"console_scripts": ["kiricap=kiricap.cli:main"]},
    python_requires=">=3.9",
)
