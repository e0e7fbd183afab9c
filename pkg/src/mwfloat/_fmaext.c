/* Fused multiply-add primitives.
 *
 * Exposes the C library's correctly rounded fma() both as a fast scalar
 * function for Python floats and as a numpy ufunc for lane-batched code.
 * Must be compiled without -ffast-math / FP contraction so every operation
 * rounds exactly once.
 */
#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <math.h>

#define NPY_NO_DEPRECATED_API NPY_1_7_API_VERSION
#include <numpy/ndarraytypes.h>
#include <numpy/ufuncobject.h>

static PyObject *
fma_scalar(PyObject *self, PyObject *args)
{
    double a, b, c;
    if (!PyArg_ParseTuple(args, "ddd", &a, &b, &c))
        return NULL;
    return PyFloat_FromDouble(fma(a, b, c));
}

static void
fma_loop(char **args, const npy_intp *dims, const npy_intp *steps, void *data)
{
    npy_intp n = dims[0];
    char *in1 = args[0], *in2 = args[1], *in3 = args[2], *out = args[3];
    npy_intp s1 = steps[0], s2 = steps[1], s3 = steps[2], so = steps[3];
    npy_intp i;

    for (i = 0; i < n; i++) {
        *(double *)out = fma(*(double *)in1, *(double *)in2, *(double *)in3);
        in1 += s1;
        in2 += s2;
        in3 += s3;
        out += so;
    }
}

static PyUFuncGenericFunction fma_funcs[1] = {&fma_loop};
static char fma_types[4] = {NPY_DOUBLE, NPY_DOUBLE, NPY_DOUBLE, NPY_DOUBLE};
static void *fma_data[1] = {NULL};

static PyMethodDef methods[] = {
    {"fma", fma_scalar, METH_VARARGS,
     "fma(a, b, c) -> float\n\nCorrectly rounded a*b + c (single rounding)."},
    {NULL, NULL, 0, NULL},
};

static struct PyModuleDef moduledef = {
    PyModuleDef_HEAD_INIT,
    "_fmaext",
    "Correctly rounded fused multiply-add (scalar and numpy ufunc).",
    -1,
    methods,
};

PyMODINIT_FUNC
PyInit__fmaext(void)
{
    PyObject *m, *ufunc;

    m = PyModule_Create(&moduledef);
    if (m == NULL)
        return NULL;
    import_array();
    import_umath();

    ufunc = PyUFunc_FromFuncAndData(fma_funcs, fma_data, fma_types, 1, 3, 1,
                                    PyUFunc_None, "fma_vec",
                                    "Elementwise correctly rounded a*b + c.", 0);
    if (ufunc == NULL) {
        Py_DECREF(m);
        return NULL;
    }
    PyModule_AddObject(m, "fma_vec", ufunc);
    return m;
}
