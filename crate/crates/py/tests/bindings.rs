use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module<F: FnOnce(&Bound<'_, PyModule>)>(f: F) {
    Python::attach(|py| {
        let m = PyModule::new(py, "pymoncurve").unwrap();
        pymoncurve::register(&m).unwrap();
        f(&m);
    });
}

#[test]
fn trigonal_curve_through_python() {
    with_module(|m| {
        let curve = m
            .getattr("build_symmetric_trigonal")
            .unwrap()
            .call1((1, 0))
            .unwrap();
        let (passed, _, bad): (bool, String, Vec<(usize, usize)>) =
            curve.call_method0("check_h1").unwrap().extract().unwrap();
        assert!(passed && bad.is_empty());
        assert_eq!(curve.getattr("n").unwrap().extract::<usize>().unwrap(), 3);
    });
}

#[test]
fn precision_refusal_raises() {
    with_module(|m| {
        let err = m
            .getattr("algebraicity_probe")
            .unwrap()
            .call1(("a4", 4, 10u64.pow(18), 50))
            .unwrap_err();
        let kind = m.getattr("PrecisionError").unwrap();
        assert!(err.get_type(m.py()).is(&kind));
    });
}
