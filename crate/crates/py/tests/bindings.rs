use affschur_py::affschur_py;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<F: for<'py> FnOnce(Python<'py>, &Bound<'py, PyDict>)>(f: F) {
    pyo3::append_to_inittab!(affschur_py);
    Python::initialize();
    Python::attach(|py| {
        let m = py.import("affschur_py").unwrap();
        let env = PyDict::new(py);
        env.set_item("a", m).unwrap();
        f(py, &env);
    });
}

fn eval<'py>(py: Python<'py>, env: &Bound<'py, PyDict>, code: &str) -> Bound<'py, PyAny> {
    let code = std::ffi::CString::new(code).unwrap();
    py.eval(&code, Some(env), None).unwrap()
}

#[test]
fn bindings_round_trip() {
    with_module(|py, env| {
        let f: String = eval(py, env, "str(a.compute_f(a.Matrix.unit(2,1,2).add(a.Matrix.unit(2,1,2)), a.Matrix.unit(2,1,2), a.Matrix.unit(2,1,2)))").extract().unwrap();
        assert_eq!(f, "v");
        let status: String = eval(py, env, "a.run_check('trho', r=2)['status']").extract().unwrap();
        assert_eq!(status, "pass");
        let bar: bool = eval(py, env, "(lambda t: t.bar() == t)(a.SchurElement.canonical(a.Matrix(2, [(1,1,1),(1,2,1)])))").extract().unwrap();
        assert!(bar);
        let terms: Vec<(i32, i64)> = eval(py, env, "(a.LaurentPoly.v(2) - a.LaurentPoly([(0, 1)])).bar().terms()").extract().unwrap();
        assert_eq!(terms, vec![(-2, 1), (0, -1)]);
        let code = std::ffi::CString::new("a.run_check('nope')").unwrap();
        let e = py.eval(&code, Some(env), None).unwrap_err();
        assert!(e.is_instance_of::<pyo3::exceptions::PyValueError>(py));
    });
}
