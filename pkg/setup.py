# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING


from setuptools import setup


def main():
    setup(
        name="bernlab",
        version="0.0",
        packages=[
            'bernlab',
        ],
        python_requires='>=3.9',
        install_requires=[
            'numpy',
        ],
        extras_require={
            'test': ['pytest', 'hypothesis', 'jsonschema', 'flake8'],
        },
        entry_points={
            'console_scripts': ['bernlab=bernlab.system:main'],
        },
    )


if __name__ == '__main__':
    main()
