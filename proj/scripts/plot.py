# Copyright 2026 The fttomo Authors
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
"""Plot CSV files written by the fttomo command-line tool.

    python scripts/plot.py spectrum spec.csv spectrum.png
    python scripts/plot.py ewv ewv.csv ewv.png
    python scripts/plot.py bloch path.csv bloch.png
    python scripts/plot.py signal sig.csv signal.png
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402


def spectrum(df, ax):
    width = 0.4
    ax.bar(df["f"] - width / 2, df["a"], width, label="a_f")
    ax.bar(df["f"] + width / 2, df["b"], width, label="b_f")
    ax.set_xlabel("harmonic f")
    ax.set_ylabel("coefficient")
    ax.legend()


def ewv(df, ax):
    finite = df[df["ewv_times_n"] < float("inf")]
    ax.plot(finite["beta"], finite["ewv_times_n"])
    ax.axhline(40.0, color="grey", linestyle="--", label="40")
    ax.set_yscale("log")
    ax.set_xlabel("retardance beta (rad)")
    ax.set_ylabel("EWV x N")
    ax.legend()


def bloch(df, ax):
    ax.plot(df["x"], df["y"], df["z"])
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("z")


def signal(df, ax):
    for column in df.columns[1:]:
        ax.plot(df["t"], df[column], marker=".", label=column)
    ax.set_xlabel("t")
    ax.legend()


def main():
    plots = {"spectrum": spectrum, "ewv": ewv, "bloch": bloch, "signal": signal}
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("kind", choices=sorted(plots))
    parser.add_argument("csv")
    parser.add_argument("png")
    args = parser.parse_args()

    df = pd.read_csv(args.csv)
    fig = plt.figure(figsize=(6, 4))
    ax = fig.add_subplot(projection="3d" if args.kind == "bloch" else None)
    plots[args.kind](df, ax)
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
