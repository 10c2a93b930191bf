"""lfa installation script."""

from setuptools import find_packages, setup

try:
    from setuptools.command.test import test as Test
except ImportError:
    # The command has been removed from setuptools 72
    Test = None

cmdclass = {}

if Test is not None:
    class PyTest(Test):
        def finalize_options(self):
            Test.finalize_options(self)
            self.test_args = ["tests"]
            self.test_suite = True

        def run_tests(self):
            import pytest
            pytest.main(self.test_args)

    cmdclass["test"] = PyTest


description = """\
lfa is a derivative-free global optimization library built around the
Lévy-flight firefly algorithm: fireflies are attracted by brighter ones with an
attractiveness decaying with distance and wander by heavy-tailed Lévy steps.

It ships inertia-free particle swarm optimization and a generational genetic
algorithm as baselines, a registry of standard benchmark functions (Ackley,
Yang's forest, Rosenbrock, De Jong, Schwefel, Rastrigin, Easom, Griewank,
Michalewicz, Shubert) and a seeded trial harness reporting evaluation counts
and success rates.\
"""

if __name__ == "__main__":
    setup(
        name="lfa",
        version="0.1.0",

        description="Lévy-flight firefly optimization library",
        long_description=description,

        license="MIT",

        classifiers=[
            "Development Status :: 4 - Beta",
            "Intended Audience :: Science/Research",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
            "Programming Language :: Python :: 3",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],

        python_requires=">=3.8",
        install_requires=["psys >= 0.3", "numpy", "scipy", "pandas"],
        extras_require={"log": ["pcli"]},
        packages=find_packages(exclude=["tests"]),
        package_data={"lfa": ["data/*.json"]},
        entry_points={"console_scripts": ["lfa = lfa.cli:main"]},

        cmdclass=cmdclass,
        tests_require=["psys >= 0.3", "numpy", "scipy", "pandas", "pytest", "hypothesis"],
    )
