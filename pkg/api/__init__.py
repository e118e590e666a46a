# API package for the R-matrix service
