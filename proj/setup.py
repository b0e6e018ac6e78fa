import os
import sys
from pathlib import Path

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

HERE = Path(__file__).parent


def eigen_include():
    candidates = [
        os.environ.get("EIGEN3_INCLUDE_DIR"),
        "/usr/include/eigen3",
        "/usr/local/include/eigen3",
        "/opt/homebrew/include/eigen3",
    ]
    for candidate in candidates:
        if candidate and (Path(candidate) / "Eigen" / "Dense").exists():
            return candidate
    raise RuntimeError(
        "Eigen headers not found; set EIGEN3_INCLUDE_DIR to the directory "
        "containing Eigen/Dense"
    )


sources = ["python/bindings.cpp"] + sorted(
    str(p.relative_to(HERE)) for p in (HERE / "src").glob("*.cpp")
)

extra_compile_args = []
extra_link_args = []
if sys.platform != "win32":
    extra_compile_args += ["-fopenmp", "-O3"]
    extra_link_args += ["-fopenmp"]

ext = Pybind11Extension(
    "forestcc._core",
    sources,
    include_dirs=["include", "vendor", eigen_include()],
    cxx_std=20,
    extra_compile_args=extra_compile_args,
    extra_link_args=extra_link_args,
)

ParallelCompile("FORESTCC_NUM_BUILD_JOBS", default=0).install()

setup(
    packages=["forestcc"],
    package_dir={"": "python"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    zip_safe=False,
)
