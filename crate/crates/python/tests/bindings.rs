use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyModule;

/// Registers the module under `entcat` and runs `code` with it imported.
fn run(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = PyModule::new(py, "entcat").unwrap();
        entcat_py::register(&module).unwrap();
        py.import("sys")
            .unwrap()
            .getattr("modules")
            .unwrap()
            .set_item("entcat", &module)
            .unwrap();
        let code = CString::new(format!("import entcat\nfrom fractions import Fraction as F\n{code}")).unwrap();
        if let Err(e) = py.run(&code, None, None) {
            panic!("{e}");
        }
    });
}

#[test]
fn analyze_returns_fractions() {
    run(r#"
r = entcat.analyze(["0.4", "0.4", "0.1", "0.1"], [F(1, 2), F(1, 4), F(1, 4), 0])
assert r.verdict == "catalyzable" and r.catalyzable
assert r.m == F(3, 5) and r.M == F(2, 3)
assert r.p_interval == (F(3, 5), F(5, 8))
assert r.r_interval == (F(3, 5), F(2, 3))
assert r.epsilon == [F(1, 10), F(1, 20), F(1, 10)]
assert r.admits("3/5") and not r.admits(0.5)
assert "p_interval=[3/5, 5/8]" in repr(r)

r = entcat.analyze([0.45, 0.45, 0.05, 0.05], [0.5, 0.35, 0.15, 0])
assert r.verdict == "infeasible" and r.reason == "empty_interval"
assert (r.m, r.M) == (1, F(1, 4)) and r.p_interval is None

r = entcat.analyze(["0.5", "0.3", "0.1", "0.1"], ["0.5", "0.25", "0.25", "0"])
import math
assert r.m == math.inf

r = entcat.analyze(["0.5", "0.3", "0.1", "0.1"], ["0.45", "0.45", "0.1", "0"])
assert r.reason == "star_violated" and r.violated_inequality == 1 and r.m is None

assert entcat.analyze([1, 0, 0, 0], [1, 0, 0, 0]).verdict == "locc_already_possible"
"#);
}

#[test]
fn theorem_and_oracle_agree() {
    run(r#"
src, tgt = ["0.4", "0.4", "0.1", "0.1"], ["0.5", "0.25", "0.25", "0"]
assert entcat.is_valid_catalyst(src, tgt, "0.6")
assert entcat.oracle_valid_catalyst(src, tgt, ["0.6", "0.4"])
assert not entcat.is_valid_catalyst(src, tgt, F(1, 2))
rows = entcat.sweep(src, tgt, denominator=40)
assert [p for p, ok in rows if ok] == [F(3, 5), F(5, 8)]
assert entcat.sweep(src, tgt, grid=["1/2", "3/5"]) == [(F(1, 2), False), (F(3, 5), True)]
assert entcat.augment(src, ["0.6", "0.4"])[:2] == [F(6, 25), F(6, 25)]
assert entcat.closed_form_lambda_prime(src, tgt, "3/5") == [F(3, 10), F(1, 2), F(13, 20), F(4, 5), F(9, 10), 1, 1, 1]
"#);
}

#[test]
fn majorization_and_lorenz() {
    run(r#"
assert entcat.partial_sums([F(1, 10), F(2, 5), F(2, 5), F(1, 10)]) == [F(2, 5), F(4, 5), F(9, 10), 1]
assert not entcat.locc_possible(["0.4", "0.4", "0.1", "0.1"], ["0.5", "0.25", "0.25", "0"])
assert entcat.first_majorization_violation(["0.4", "0.4", "0.1", "0.1"], ["0.5", "0.25", "0.25", "0"]) == 2
assert entcat.is_majorized_by([F(1, 3)] * 3, [1, 0, 0])
assert entcat.lorenz_points(["1/4"] * 4) == [(F(k, 4), F(k, 4)) for k in range(5)]
assert entcat.parse_rational("1.5e-1") == F(3, 20)
"#);
}

#[test]
fn construction() {
    run(r#"
c = entcat.construct_states("2/3", "1/3")
assert c.mu == F(1, 10) and c.a == F(9, 16) and c.branch == "m0_le_1"
assert c.source == [F(k, 160) for k in (81, 45, 22, 12)]
assert c.target == [F(k, 160) for k in (90, 30, 30, 10)]
assert c.epsilon == [F(k, 160) for k in (9, 6, 2)]
r = entcat.analyze(c.source, c.target)
assert (r.m, r.M) == (F(2, 3), F(1, 3))
assert entcat.construct_states(F(3, 2), M0=F(1, 2)).a == F(4, 9)
assert entcat.construct_states("2/3", "1/3", mu="1/20").mu == F(1, 20)
"#);
}

#[test]
fn errors() {
    run(r#"
def raises(exc, f, *args):
    try:
        f(*args)
    except exc:
        return
    raise AssertionError(f"{f.__name__}{args} did not raise {exc.__name__}")

raises(entcat.EntcatError, entcat.analyze, ["0.5", "0.5", "0.5", "0"], [1, 0, 0, 0])
raises(entcat.EntcatError, entcat.analyze, ["0.5", "0.5"], [1, 0, 0, 0])
raises(ValueError, entcat.parse_rational, "1/0")
raises(TypeError, entcat.analyze, [True, 0, 0, 0], [1, 0, 0, 0])
raises(TypeError, entcat.analyze, [[1], 0, 0, 0], [1, 0, 0, 0])
raises(entcat.EntcatError, entcat.construct_states, 1, 1)
raises(entcat.EntcatError, entcat.is_valid_catalyst, [1, 0, 0, 0], [1, 0, 0, 0], "0.6")
raises(entcat.EntcatError, entcat.is_valid_catalyst, ["0.4", "0.4", "0.1", "0.1"], ["0.5", "0.25", "0.25", "0"], "0.4")
"#);
}
