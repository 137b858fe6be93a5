from setuptools import setup, find_packages

setup(
    name='pyEulerian',
    version='0.1.0',
    author='the pyEulerian developers',
    packages=find_packages(exclude=['examples', 'examples.*']),
    license='COPYRIGHT.txt',
    description='Exact classical, general and q-Eulerian numbers and polynomials with identity verification',
    long_description=open('README.md').read(),
    install_requires=['numpy', 'scipy>=0.13'],
    entry_points={'console_scripts': ['pyEulerian = pyEulerian.cli:main']},
)
