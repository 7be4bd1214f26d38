import setuptools

setuptools.setup(
    name='incidence-workbench',
    version='0.1',
    packages=setuptools.find_packages(),
    package_data={
        'incidence_workbench.catalog': ['data/*.json'],
    },
    python_requires='>=3.11',
    install_requires=[
        'absl-py==1.4.0',
        'influxdb-client==1.36.1',
        'sympy==1.12',
    ],
    extras_require={
        'test': [
            'networkx==3.1',
        ],
    },
    entry_points={
        'console_scripts': [
            'incidence-workbench = incidence_workbench.main:app_run_main',
        ],
    },
)
