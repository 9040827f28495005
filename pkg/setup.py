#! /usr/bin/env python

###################################
# Install alexmod                 #
###################################

from setuptools import setup, find_packages

long_description = '''alexmod computes cohomological Alexander modules of finite simplicial complexes mapping to an algebraic torus, together with their maximal Artinian submodules, using exact rational arithmetic throughout.  It also computes Mellin transforms of local systems on the torus, shortcuts for locally trivial fibrations, and checks of the resulting modules against the vanishing range, Jordan block bounds and semisimplicity expected of algebraic maps.'''

setup(name = 'alexmod',
      version = '1.0.0',
      description = 'Cohomological Alexander modules and their maximal Artinian submodules',
      long_description = long_description,
      long_description_content_type = 'text/markdown',
      classifiers = [
          'Topic :: Scientific/Engineering :: Mathematics',
          'Development Status :: 4 - Beta',
          'Environment :: Console',
          'Programming Language :: Python :: 3',
          'Intended Audience :: Science/Research'],
      keywords = ['alexander module', 'local system', 'groebner basis', 'smith normal form', 'monodromy'],
      entry_points = {
          'console_scripts': ['alexmod = alexmod.__main__:main']
      },
      packages = find_packages('src'),
      package_dir = {'': 'src'},
      python_requires = '>= 3.8',
      install_requires = ['sympy'],
      extras_require = {'test': ['pytest']}
)
