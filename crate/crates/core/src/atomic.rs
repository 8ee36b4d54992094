use ndarray::Array2;
use ndarray_linalg::Eig;
use num_complex::Complex64;

pub fn smoke_eig() -> f64 {
    let mut m = Array2::<Complex64>::zeros((4, 4));
    m[(0, 1)] = Complex64::new(0.0, -1.0);
    m[(1, 0)] = Complex64::new(0.0, 1.0);
    m[(2, 3)] = Complex64::new(2.0, 0.0);
    m[(3, 2)] = Complex64::new(2.0, 0.0);
    let (vals, _vecs) = m.eig().unwrap();
    vals.iter().map(|v| v.re.abs() + v.im.abs()).sum()
}
