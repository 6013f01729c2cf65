"""Orthosymplectic insertion, jeu de taquin and Cauchy-identity bijections."""
