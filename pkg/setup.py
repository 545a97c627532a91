from setuptools import setup

setup(
    name='disk_evac',
    version='0.3.0',
    packages=[
        'disk_evac',
        'disk_evac.rst',
    ],
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.6',
    ],
    extras_require={
        'docs': ['Sphinx'],
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': [
            'evac = disk_evac.cli:main',
        ],
    },
    scripts=[
        'scripts/evac.py',
    ],
    include_package_data=True,
    zip_safe=False,
)
