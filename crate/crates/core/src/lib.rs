pub mod criteria;
pub mod group;
pub mod presentation;
pub mod quandle;
pub mod tangle;
pub mod text;
