# THIS FILE IS GENERATED FROM SYMADAPT SETUP.PY
version = '0.1.0'
full_version = '0.1.0.dev0'
is_released = False

if not is_released:
    version = full_version
