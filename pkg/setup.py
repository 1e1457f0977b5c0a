from setuptools import setup, find_packages


with open('README.md') as f:
    readme = f.read()

setup(
    name='rscolour',
    version='0.1.0',
    description='Restricted star colouring toolkit.',
    long_description=readme,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=('tests', 'docs')),
    python_requires='>=3.9',
    install_requires=['numpy', 'scipy', 'networkx>=3.2'],
    tests_require=['pynose'],
    entry_points={'console_scripts': ['rscolour=rscolour.__main__:main']},
)
