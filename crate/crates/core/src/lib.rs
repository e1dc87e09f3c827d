//! Riemannian principal component analysis.
//!
//! A data table is given local geometry by a UMAP-style fuzzy k-NN graph.
//! Differences between rows are shrunk by `1 - B_ij`, where `B` is the
//! symmetric graph similarity; the mean, covariance and correlation are
//! computed under that geometry, and the correlation matrix is
//! eigen-decomposed as in correlation PCA.

pub mod cli;
pub mod dataio;
pub mod error;
pub mod knngraph;
pub mod riemann;
pub mod rpca;

pub use dataio::{DataMatrix, LabeledDataset};
pub use error::{Result, RpcaError};
pub use knngraph::{GraphParams, NeighborGraph, SimilarityMatrix};
pub use riemann::{RhoMatrix, RiemannianMean, RiemannianModel};
pub use rpca::{classical_pca, fit_rpca, Centering, EigenSystem, FitOptions, RpcaFit, RpcaResult};
