# -*- coding: utf-8 -*-
"""Setup configuration."""
from setuptools import find_packages
from setuptools import setup


setup(
    name="mailbox_synchronizability",
    version="0.1.0",
    description="Synchronizability degree and k-synchronizability analysis of communicating automata with mailbox (one FIFO buffer per process) semantics.",
    url="https://github.com/CuriBio/mailbox-synchronizability",
    author="Curi Bio",
    author_email="contact@curibio.com",
    license="MIT",
    packages=find_packages("src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "domain_model>=0.3",
        "immutable_data_validation>=0.2.1",
        "networkx>=2.6",
        "graphviz>=0.16",
    ],
    entry_points={
        "console_scripts": ["mailbox-sync=mailbox_synchronizability.cli:main"]
    },
    zip_safe=False,
    include_package_data=True,
    classifiers=[
        "Development Status :: 1 - Planning",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering",
    ],
)
