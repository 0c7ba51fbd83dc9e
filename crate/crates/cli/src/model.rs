use qshilov_core::freealg::{graded_dimension, AlgebraElement, LocalElement, Localization, Presentation};
use qshilov_core::qmatrix::{MatrixError, QMatAlgebra};
use qshilov_core::qsymmatrix::QSymMatAlgebra;
use qshilov_core::scalars::Scalar;
use qshilov_core::uqaction::{ActionEngine, StarStructure, UqSpec};

/// One of the two matrix algebras, behind a common surface.
pub enum Model {
    An(QMatAlgebra),
    Cn(QSymMatAlgebra),
}

impl Model {
    pub fn new(algebra: crate::Algebra, n: usize) -> Result<Self, MatrixError> {
        Ok(match algebra {
            crate::Algebra::An => Model::An(QMatAlgebra::new(n)?),
            crate::Algebra::Cn => Model::Cn(QSymMatAlgebra::new(n)?),
        })
    }

    pub fn n(&self) -> usize {
        match self {
            Model::An(a) => a.n(),
            Model::Cn(a) => a.n(),
        }
    }

    pub fn pres(&self) -> &Presentation {
        match self {
            Model::An(a) => a.presentation(),
            Model::Cn(a) => a.presentation(),
        }
    }

    pub fn loc(&self) -> &Localization {
        match self {
            Model::An(a) => a.localization(),
            Model::Cn(a) => a.localization(),
        }
    }

    pub fn engine(&self) -> &ActionEngine {
        match self {
            Model::An(a) => a.engine(),
            Model::Cn(a) => a.engine(),
        }
    }

    pub fn spec(&self) -> &UqSpec {
        match self {
            Model::An(a) => a.spec(),
            Model::Cn(a) => a.spec(),
        }
    }

    pub fn det(&self) -> &AlgebraElement {
        match self {
            Model::An(a) => a.det(),
            Model::Cn(a) => a.sym_det(),
        }
    }

    /// The explicit involution for `A_n`, the transported one for `C_n`.
    pub fn star(&self) -> Result<StarStructure, MatrixError> {
        match self {
            Model::An(a) => a.explicit_star(),
            Model::Cn(a) => a.derived_star(),
        }
    }

    pub fn point_eval(&self, f: &LocalElement) -> Result<Scalar, MatrixError> {
        match self {
            Model::An(a) => a.point_eval(f),
            Model::Cn(a) => a.point_eval(f),
        }
    }

    pub fn point_value(&self, g: u16) -> Scalar {
        match self {
            Model::An(a) => a.point_value(g),
            Model::Cn(a) => a.point_value(g),
        }
    }

    pub fn commutant(&self, g: u16) -> Result<Scalar, MatrixError> {
        match self {
            Model::An(a) => {
                let (i, j) = a.indices(g);
                a.det_commutant_scalar(i, j)
            }
            Model::Cn(a) => {
                let (i, j) = a.indices(g);
                a.sym_det_commutant_scalar(i, j)
            }
        }
    }

    pub fn dimension(&self, d: usize) -> u128 {
        graded_dimension(self.pres(), d)
    }

    /// Rendering of `num * det^-m`.
    pub fn render(&self, f: &LocalElement) -> String {
        let num = self.pres().render(&f.num);
        if f.m == 0 {
            num
        } else {
            format!("({num}) * det^-{}", f.m)
        }
    }
}
