# coding=utf-8
# Copyright 2022 The HitchFib Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import subprocess

from setuptools import find_packages, setup

version = "0.1.0"
package_name = "HitchFib"
cwd = os.path.dirname(os.path.abspath(__file__))

# pinned in requirements.txt for dev/linter.sh, not needed at run time
LINT_TOOLS = ("flake8", "isort", "black")


def git_sha():
    try:
        out = subprocess.check_output(["git", "rev-parse", "HEAD"], cwd=cwd)
    except (OSError, subprocess.CalledProcessError):
        return "Unknown"
    return out.decode("ascii").strip()


def write_version_file():
    with open(os.path.join(cwd, "hitchfib", "version.py"), "w") as f:
        f.write(f"__version__ = '{version}'\n")
        f.write(f"git_version = {git_sha()!r}\n")


def read_requirements():
    with open(os.path.join(cwd, "requirements.txt"), "r", encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip() and not line.startswith("#")]
    lint = [r for r in lines if r.split("==")[0] in LINT_TOOLS]
    return [r for r in lines if r not in lint], lint


if __name__ == "__main__":
    print(f"Building wheel {package_name}-{version}")

    with open(os.path.join(cwd, "README.md"), "r", encoding="utf-8") as f:
        readme = f.read()
    install_requires, lint_requires = read_requirements()

    write_version_file()

    setup(
        name=package_name,
        version=version,
        description="Singular fibers of rank 2 irregular Hitchin fibrations with two poles",
        long_description=readme,
        long_description_content_type="text/markdown",
        license="Apache License 2.0",
        python_requires=">=3.7",
        install_requires=install_requires,
        extras_require={"dev": lint_requires},
        packages=find_packages(exclude=("tests", "tests.*", "configs", "tools")),
        test_suite="tests",
    )
