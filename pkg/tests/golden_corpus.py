"""CLI invocations whose output is pinned byte-for-byte."""

from pathlib import Path

DATA = Path(__file__).parent / "data"

GOLDEN = [
    ("analyze_z2_table", ["analyze", "--f", "z^2"]),
    ("analyze_z2_json", ["analyze", "--f", "z^2", "--format", "json"]),
    ("analyze_z2_csv", ["analyze", "--f", "z^2", "--format", "csv"]),
    ("analyze_inv_z2_json", ["analyze", "--f", "1/z^2", "--format", "json"]),
    ("analyze_parabolic_json", ["analyze", "--f", "z^2+0.25", "--format", "json"]),
    ("analyze_cubic_table", ["analyze", "--f", "z^3"]),
    ("analyze_translation_json", ["analyze", "--f", "z+1", "--format", "json"]),
    ("analyze_rational_table", ["analyze", "--f", "2*z/(z^2+z+1)"]),
    ("analyze_complex_json", ["analyze", "--f", "i*z+z^2", "--format", "json"]),
    ("verify_cubic_table", ["verify", "--f", "z^3+0.5*z"]),
    ("verify_triple_json", ["verify", "--f", "z+z^3", "--format", "json"]),
    ("harmonic_cubic_table", ["harmonic", "--h", "z^3", "--g", "z^3", "--check", "conjecture"]),
    ("harmonic_cubic_json", ["harmonic", "--h", "z^3", "--g", "z^3", "--format", "json"]),
    ("harmonic_cubic_csv", ["harmonic", "--h", "z^3", "--g", "z^3", "--format", "csv"]),
    ("harmonic_rational_table", ["harmonic", "--h", "1/z^2", "--g", "z^2"]),
    ("harmonic_mixed_json", ["harmonic", "--h", "z^2-1", "--g", "z^3+0.5i*z", "--check", "all", "--format", "json"]),
    ("quadratic_quarter_table", ["quadratic", "--c", "0.25"]),
    ("quadratic_quarter_json", ["quadratic", "--c", "0.25", "--format", "json"]),
    ("quadratic_one_table", ["quadratic", "--c", "1"]),
    ("quadratic_negative_table", ["quadratic", "--c", "-1"]),
    ("quadratic_complex_json", ["quadratic", "--c", "0.3+0.2i", "--format", "json"]),
    ("batch_random_table", ["batch", "--random", "8", "--seed", "3", "--degree", "3"]),
    ("batch_random_json", ["batch", "--random", "4", "--seed", "5", "--degree", "2", "--kind", "polynomial",
                           "--format", "json"]),
    ("batch_random_csv", ["batch", "--random", "6", "--seed", "1", "--degree", "4", "--jobs", "3", "--format", "csv"]),
    ("plot_cubic_harmonic_svg", ["plot", "--in", str(DATA / "cubic_harmonic.json")]),
    ("plot_rational_svg", ["plot", "--in", str(DATA / "rational.json"), "--width", "600", "--height", "600"]),
    ("err_identity", ["analyze", "--f", "z"]),
    ("err_implicit", ["analyze", "--f", "2z"]),
    ("err_constant", ["analyze", "--f", "3"]),
    ("err_usage", ["analyze"]),
]
