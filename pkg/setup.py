from setuptools import setup, find_packages

setup(
    name="invertml",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    py_modules=["main"],
    install_requires=[
        "click>=8.1.0",
        "tomli>=2.0.0; python_version < '3.11'",
        "tomli-w>=1.0.0",
        "numpy>=1.22",
        "pandas>=1.3",
        "scipy>=1.9",
        "statsmodels>=0.13",
    ],
    extras_require={
        'dev': [
            'pytest>=7.0.0',
            'pytest-cov>=4.0.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'invertml=invertml.cli.cli:cli',
        ],
    },
    python_requires=">=3.8",
    include_package_data=True,
)
